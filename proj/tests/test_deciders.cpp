#include "doctest.h"

#include "catalog/catalog.hpp"
#include "core/error.hpp"
#include "deciders/deciders.hpp"
#include "gen.hpp"

using namespace symcan;

namespace {

QVector unit(std::size_t n, std::size_t i) {
  QVector v(n);
  v[i] = 1;
  return v;
}

Rational det_at(const SymbolOperator& a, const QVector& xi) {
  QMatrix m = a.evaluate(xi);
  return determinant(m.transpose() * m);
}

// Adjugate of an invertible matrix as det * inverse.
QMatrix adjugate_at(const QMatrix& g) {
  return inverse(g)->scaled(determinant(g));
}

bool certified(CancelStatus s) { return s != CancelStatus::NotCancelingSampled; }
bool certified(SpanStatus s) { return s != SpanStatus::DoesNotSpanSampled; }

// Small operators whose verdicts are all decided.
std::vector<SymbolOperator> decided_operators() {
  return {gradient(1),        gradient(2),      gradient(3),         laplacian(2),
          hodge_pair(3, 1),   hodge_pair(3, 2), sym_gradient_sk(2, 1), quaternion(),
          defigueiredo(2, 2), split_laplacian(2, 1), quadratic_collection(2, 1),
          hyperbolic_example(), strange_r4()};
}

// Uniformly random rational point of a box.
QVector point_in(gen::Source& g, const Box& b) {
  QVector p(b.lo.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational t(g.integer(0, 64), 64);
    p[i] = b.lo[i] + t * (b.hi[i] - b.lo[i]);
  }
  return p;
}

bool interiors_overlap(const Box& a, const Box& b) {
  if (a.axis != b.axis || a.sign != b.sign) return false;
  for (std::size_t i = 0; i < a.lo.size(); ++i) {
    if (i == a.axis) continue;
    if (a.hi[i] <= b.lo[i] || b.hi[i] <= a.lo[i]) return false;
  }
  return true;
}

void check_cover(const SymbolOperator& a, const EllipticityVerdict& v, gen::Source& g) {
  const std::size_t n = a.n();
  std::map<std::pair<std::size_t, int>, Rational> area;
  for (const auto& cb : v.cover) {
    const Box& b = cb.box;
    REQUIRE(sgn(cb.lower_bound) > 0);
    REQUIRE(b.lo[b.axis] == b.sign);
    REQUIRE(b.hi[b.axis] == b.sign);
    Rational vol = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == b.axis) continue;
      REQUIRE(b.lo[i] >= -1);
      REQUIRE(b.hi[i] <= 1);
      REQUIRE(b.lo[i] < b.hi[i]);
      vol *= b.hi[i] - b.lo[i];
    }
    area[{b.axis, b.sign}] += vol;
    CHECK(det_at(a, point_in(g, b)) >= cb.lower_bound);
  }
  CHECK(area.size() == 2 * n);
  for (const auto& [face, total] : area) CHECK(total == Rational(1 << (n - 1)));
  if (v.cover.size() <= 400)
    for (std::size_t i = 0; i < v.cover.size(); ++i)
      for (std::size_t j = i + 1; j < v.cover.size(); ++j) CHECK_FALSE(interiors_overlap(v.cover[i].box, v.cover[j].box));
}

void check_canceling_certificate(const SymbolOperator& a, const CancelingVerdict& c, gen::Source& g) {
  if (c.status == CancelStatus::Canceling) {
    // complements of the sampled images must span E
    QMatrix stacked(a.dim_e(), 0);
    for (const auto& xi : c.samples) stacked = stacked.hstack(kernel_basis(a.evaluate(xi).transpose()).basis());
    CHECK(rank(stacked) == a.dim_e());
  }
  if (c.status == CancelStatus::NotCanceling) {
    REQUIRE(c.witness.has_value());
    const QVector& e = *c.witness;
    CHECK_FALSE(is_zero_vector(e));
    CHECK(WitnessIdentity(a).residual(e).is_zero());
    for (int t = 0; t < 5; ++t) {
      QVector xi = g.nonzero_vector(a.n());
      QMatrix m = a.evaluate(xi);
      QMatrix gm = m.transpose() * m;
      CHECK(m * (adjugate_at(gm) * (m.transpose() * e)) == QMatrix::column(e).scaled(determinant(gm)).col(0));
      CHECK(solve_exact(m, e).has_value());
    }
  }
  for (std::size_t i = 1; i < c.dim_history.size(); ++i) CHECK(c.dim_history[i] <= c.dim_history[i - 1]);
  const std::size_t initial = a.dim_e() + 4;
  CHECK(c.samples.size() >= initial);
  if (c.status != CancelStatus::NotCancelingSampled) {
    CHECK(c.refinements <= a.dim_e());
    for (std::size_t i = initial; i < c.dim_history.size(); ++i) CHECK(c.dim_history[i] < c.dim_history[i - 1]);
  }
}

}  // namespace

TEST_CASE("ellipticity examples") {
  CHECK(check_ellipticity(gradient(2)).status == EllipticStatus::Elliptic);

  EllipticityVerdict h = check_ellipticity(hyperbolic_example());
  REQUIRE(h.status == EllipticStatus::NotElliptic);
  CHECK(h.direction == QVector{1, 1});
  CHECK(h.kernel_vector == QVector{1, 1});

  EllipticityVerdict s = check_ellipticity(strange_r4());
  REQUIRE(s.status == EllipticStatus::NotElliptic);
  CHECK(s.direction == QVector{1, 0, 1, 0});
  CHECK(is_zero_vector(strange_r4().evaluate(s.direction) * s.kernel_vector));

  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t l = 1; l < n; ++l) CHECK(check_ellipticity(hodge_pair(n, l)).status == EllipticStatus::Elliptic);

  // more unknowns than equations
  EllipticityVerdict d = check_ellipticity(divergence(3));
  REQUIRE(d.status == EllipticStatus::NotElliptic);
  CHECK(is_zero_vector(divergence(3).evaluate(d.direction) * d.kernel_vector));
  CHECK_FALSE(is_zero_vector(d.kernel_vector));
}

TEST_CASE("ellipticity gives up on an irrational zero") {
  // x^2 - 2 y^2 vanishes only on irrational directions
  SymbolOperator a(2, 1, 1, 2,
                   {{MultiIndex({2, 0}), QMatrix{{1}}}, {MultiIndex({0, 2}), QMatrix{{-2}}}});
  EllipticityVerdict v = check_ellipticity(a, {12, 200000});
  CHECK(v.status == EllipticStatus::Undecided);
  REQUIRE(v.failing_box.has_value());
  CHECK(v.depth_reached == 12);
  CHECK(v.cover.empty());
}

TEST_CASE("simplest rational between two bounds") {
  CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(simplest_between(Rational(3, 10), Rational(4, 10)) == Rational(1, 3));
  CHECK(simplest_between(Rational(-7, 4), Rational(-8, 5)) == Rational(-5, 3));
  CHECK(simplest_between(Rational(-7, 4), Rational(-3, 2)) == Rational(-3, 2));
  CHECK(simplest_between(Rational(-1), Rational(2)) == 0);
  CHECK(simplest_between(Rational(5, 2), Rational(5, 2)) == Rational(5, 2));
}

TEST_CASE("centred lower bound never exceeds the polynomial on the box") {
  gen::Source g(31);
  for (int t = 0; t < gen::kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    Polynomial p(n);
    for (const auto& alpha : multi_indices_of_degree(n, static_cast<unsigned>(g.integer(1, 4))))
      p.add_term(alpha, g.rational(4));
    Box b{0, 1, QVector(n), QVector(n), 0};
    for (std::size_t i = 0; i < n; ++i) {
      b.lo[i] = g.rational(4);
      b.hi[i] = b.lo[i] + Rational(g.integer(0, 8), 4);
    }
    const Rational lb = centered_lower_bound(p, b.lo, b.hi);
    for (int k = 0; k < 10; ++k) CHECK(p.evaluate(point_in(g, b)) >= lb);
  }
}

TEST_CASE("cocanceling examples") {
  for (std::size_t n = 2; n <= 4; ++n) {
    CocancelingVerdict v = check_cocanceling(divergence(n));
    CHECK(v.cocanceling);
    CHECK(v.joint_kernel.is_zero());
    for (std::size_t l = 0; l < n; ++l) CHECK(check_cocanceling(exterior_d(n, l)).cocanceling);
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    CocancelingVerdict v = check_cocanceling(curl_div(n));
    CHECK_FALSE(v.cocanceling);
    QVector id(n * n);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    CHECK(v.joint_kernel == Subspace::span(n * n, {id}));
    CHECK_FALSE(v.left_inverses.has_value());
  }
  SymbolOperator sv1 = saint_venant_k(1, 2);
  CocancelingVerdict z = check_cocanceling(sv1);
  CHECK_FALSE(z.cocanceling);
  CHECK(z.joint_kernel.is_full());
}

TEST_CASE("left inverse examples") {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto k = left_inverses(divergence(n));
    REQUIRE(k.has_value());
    for (std::size_t i = 0; i < n; ++i) CHECK(k->at(MultiIndex::unit(n, i)) == QMatrix::column(unit(n, i)));
  }
  SymbolOperator h = higher_order_div(2, 3);
  auto k = left_inverses(h);
  REQUIRE(k.has_value());
  QMatrix total(h.dim_v(), h.dim_v());
  for (const auto& [alpha, l] : h.terms()) {
    CHECK(k->at(alpha) == l.transpose());  // coordinate injection
    total = total + k->at(alpha) * l;
  }
  CHECK(total == QMatrix::identity(h.dim_v()));
  CHECK_FALSE(left_inverses(curl_div(3)).has_value());
}

TEST_CASE("canceling examples") {
  CancelingVerdict g1 = check_canceling(gradient(1));
  REQUIRE(g1.status == CancelStatus::NotCanceling);
  CHECK(*g1.witness == QVector{1});
  CHECK(check_canceling(gradient(2)).status == CancelStatus::Canceling);

  for (std::size_t n = 1; n <= 3; ++n) {
    CancelingVerdict l = check_canceling(laplacian(n));
    CHECK(l.status == CancelStatus::NotCanceling);
    CHECK(l.intersection.is_full());
  }

  for (std::size_t n = 3; n <= 4; ++n)
    for (std::size_t l = 1; l < n; ++l) {
      CAPTURE(n);
      CAPTURE(l);
      CancelingVerdict c = check_canceling(hodge_pair(n, l));
      const bool expected = 2 <= l && l + 2 <= n;
      CHECK((c.status == CancelStatus::Canceling) == expected);
      CHECK(certified(c.status));
    }

  // l = 1: the common image is {0} x forms of degree 0, the last coordinate
  SymbolOperator h = hodge_pair(3, 1);
  CancelingVerdict c = check_canceling(h);
  CHECK(c.intersection == Subspace::span(h.dim_e(), {unit(h.dim_e(), h.dim_e() - 1)}));

  CHECK(check_canceling(quaternion()).status == CancelStatus::Canceling);
}

TEST_CASE("bourgain-brezis spanning examples") {
  CHECK(check_bb_spanning(gradient(2), true).status == SpanStatus::Spans);
  SpanningVerdict l = check_bb_spanning(laplacian(2), true);
  CHECK(l.status == SpanStatus::DoesNotSpan);
  CHECK(l.span.is_zero());
  REQUIRE(l.witness.has_value());
  CHECK(*l.witness == QVector{1});
  CHECK(check_bb_spanning(sym_gradient_sk(2, 1), true).status == SpanStatus::Spans);
}

TEST_CASE("partial canceling examples") {
  SymbolOperator h = hodge_pair(3, 1);
  const std::size_t top = h.dim_e() - 1;
  QMatrix t(1, h.dim_e());
  t(0, top) = 1;
  PartialVerdict p = check_partial_canceling(h, t, true);
  CHECK(p.status == PartialStatus::Holds);
  CHECK(p.detail.intersection.is_zero());

  PartialVerdict zero = check_partial_canceling(h, QMatrix(2, h.dim_e()), true);
  CancelingVerdict plain = check_canceling(h, true);
  CHECK(zero.status == PartialStatus::Fails);
  CHECK(zero.detail.intersection == plain.intersection);

  gen::Source g(32);
  for (const auto& a : decided_operators())
    CHECK(check_partial_canceling(a, QMatrix::identity(a.dim_e()), false).status == PartialStatus::Holds);

  CHECK_THROWS_AS(check_partial_canceling(h, QMatrix(1, 2), true), Error);
}

TEST_CASE("verdicts agree with the ground truth table") {
  for (const auto& gt : ground_truth()) {
    CAPTURE(catalog_query(gt.name, gt.params));
    CatalogItem item = catalog_get(gt.name, gt.params);
    if (gt.cocanceling) {
      CocancelingVerdict v = check_cocanceling(item.op);
      CHECK(v.cocanceling == *gt.cocanceling);
      if (gt.joint_kernel) CHECK(v.joint_kernel.dim() == 1);
    }
    if (gt.elliptic) {
      EllipticityVerdict e = check_ellipticity(item.op);
      CHECK(e.status == (*gt.elliptic ? EllipticStatus::Elliptic : EllipticStatus::NotElliptic));
      if (gt.canceling) {
        CancelingVerdict c = check_canceling(item.op, e.status == EllipticStatus::Elliptic);
        CHECK((c.status == CancelStatus::Canceling) == *gt.canceling);
      }
    }
  }
}

TEST_CASE("ellipticity certificates are sound on random operators") {
  gen::Source g(33);
  int decided = 0;
  for (int t = 0; t < gen::kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const std::size_t dv = static_cast<std::size_t>(g.integer(1, 2));
    const std::size_t de = static_cast<std::size_t>(g.integer(1, 3));
    const unsigned order = static_cast<unsigned>(g.integer(1, 2));
    SymbolOperator a = gen::random_operator(g, n, dv, de, order);
    EllipticityVerdict v = check_ellipticity(a);
    if (v.status == EllipticStatus::NotElliptic) {
      CHECK_FALSE(is_zero_vector(v.direction));
      CHECK_FALSE(is_zero_vector(v.kernel_vector));
      CHECK(is_zero_vector(a.evaluate(v.direction) * v.kernel_vector));
    } else if (v.status == EllipticStatus::Elliptic) {
      check_cover(a, v, g);
      for (int k = 0; k < 5; ++k) CHECK(sgn(det_at(a, g.nonzero_vector(n))) > 0);
    } else {
      CHECK(v.failing_box.has_value());
    }
    decided += v.status != EllipticStatus::Undecided;
  }
  CHECK(decided > gen::kTrials / 2);
}

TEST_CASE("catalog ellipticity covers are sound") {
  gen::Source g(34);
  for (const auto& a : decided_operators()) {
    EllipticityVerdict v = check_ellipticity(a);
    if (v.status == EllipticStatus::Elliptic) check_cover(a, v, g);
  }
}

TEST_CASE("canceling certificates are sound and samples shrink monotonically") {
  gen::Source g(35);
  auto base = decided_operators();
  for (int t = 0; t < gen::kTrials; ++t) {
    SymbolOperator a;
    if (t % 2) {
      const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
      const std::size_t dv = static_cast<std::size_t>(g.integer(1, 2));
      const std::size_t de = static_cast<std::size_t>(g.integer(dv, 4));
      a = gen::random_operator(g, n, dv, de, static_cast<unsigned>(g.integer(1, 2)));
    } else {
      const auto& b = base[static_cast<std::size_t>(g.integer(0, static_cast<long>(base.size()) - 1))];
      a = b.composed(g.invertible(b.dim_e()), g.invertible(b.dim_v()));
    }
    const bool elliptic = check_ellipticity(a).status == EllipticStatus::Elliptic;
    CancelingOptions opts{static_cast<std::uint64_t>(g.integer(1, 1 << 20)), 2};
    check_canceling_certificate(a, check_canceling(a, elliptic, opts), g);
  }
}

TEST_CASE("verdicts are invariant under invertible changes of variables") {
  gen::Source g(36);
  auto base = decided_operators();
  for (int t = 0; t < gen::kTrials; ++t) {
    const auto& a = base[static_cast<std::size_t>(t) % base.size()];
    CAPTURE(t);
    SymbolOperator b = a.composed(g.invertible(a.dim_e()), g.invertible(a.dim_v()));
    EllipticityVerdict ea = check_ellipticity(a), eb = check_ellipticity(b);
    if (ea.status != EllipticStatus::Undecided && eb.status != EllipticStatus::Undecided)
      CHECK(ea.status == eb.status);
    const bool elliptic = ea.status == EllipticStatus::Elliptic;

    SymbolOperator m = a.left_composed(g.invertible(a.dim_e()));
    SymbolOperator s = a.scaled(g.nonzero_rational());
    CHECK(check_ellipticity(s).status == ea.status);
    CancelingVerdict ca = check_canceling(a, elliptic, {1, 2});
    for (const SymbolOperator* other : {&m, &s}) {
      CancelingVerdict co = check_canceling(*other, elliptic, {static_cast<std::uint64_t>(t + 2), 2});
      if (certified(ca.status) && certified(co.status)) CHECK(ca.status == co.status);
    }
  }
}

TEST_CASE("spanning agrees with canceling") {
  gen::Source g(37);
  auto base = decided_operators();
  int compared = 0;
  for (int t = 0; t < gen::kTrials; ++t) {
    SymbolOperator a;
    if (t < static_cast<int>(base.size())) {
      a = base[static_cast<std::size_t>(t)];
    } else {
      const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
      const std::size_t dv = static_cast<std::size_t>(g.integer(1, 2));
      a = gen::random_operator(g, n, dv, static_cast<std::size_t>(g.integer(dv, 3)),
                               static_cast<unsigned>(g.integer(1, 2)));
    }
    const bool elliptic = check_ellipticity(a).status == EllipticStatus::Elliptic;
    CancelingOptions opts{static_cast<std::uint64_t>(t + 1), 2};
    CancelingVerdict c = check_canceling(a, elliptic, opts);
    SpanningVerdict s = check_bb_spanning(a, elliptic, opts);
    if (s.status == SpanStatus::DoesNotSpan) {
      for (const auto& xi : s.samples) CHECK(solve_exact(a.evaluate(xi), *s.witness).has_value());
    }
    if (certified(c.status) && certified(s.status)) {
      CHECK((c.status == CancelStatus::Canceling) == (s.status == SpanStatus::Spans));
      ++compared;
    }
  }
  CHECK(compared > gen::kTrials / 2);
}

TEST_CASE("left inverses exist exactly for cocanceling constraints") {
  gen::Source g(38);
  for (int t = 0; t < gen::kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const std::size_t de = static_cast<std::size_t>(g.integer(1, 4));
    const std::size_t df = static_cast<std::size_t>(g.integer(1, 3));
    const unsigned order = static_cast<unsigned>(g.integer(1, 2));
    SymbolOperator l = gen::random_operator(g, n, de, df, order);
    if (t % 3 == 0) l = l.composed(QMatrix::identity(df), g.low_rank(de, de, de - 1));
    CocancelingVerdict v = check_cocanceling(l);
    auto k = left_inverses(l);
    CHECK(v.cocanceling == k.has_value());
    CHECK(v.cocanceling == v.joint_kernel.is_zero());
    for (std::size_t j = 0; j < v.joint_kernel.dim(); ++j) {
      QVector e = v.joint_kernel.basis_vector(j);
      for (int r = 0; r < 3; ++r) CHECK(is_zero_vector(l.evaluate(g.vector(n)) * e));
    }
    if (t % 3 == 0) CHECK_FALSE(v.cocanceling);
    if (k) {
      QMatrix total(de, de);
      for (const auto& [alpha, m] : l.terms()) total = total + k->at(alpha) * m;
      CHECK(total == QMatrix::identity(de));
    }
  }
}

TEST_CASE("sample directions are reproducible integer points") {
  auto a = sample_directions(3, 20, 7), b = sample_directions(3, 20, 7);
  CHECK(a == b);
  CHECK(a != sample_directions(3, 20, 8));
  for (const auto& v : a) {
    CHECK_FALSE(is_zero_vector(v));
    for (const auto& x : v) {
      CHECK(x.get_den() == 1);
      CHECK(abs_value(x) <= 10);
    }
  }
}
