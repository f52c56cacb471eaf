#include <algorithm>

#include "core/error.hpp"
#include "deciders/deciders.hpp"

namespace symcan {

namespace {

struct BoxBound {
  Rational lower;
  Rational centre_value;
};

// q is already centred: q(x) = p(centre + x) for |x_i| <= radius_i. The
// pure terms a x_i + b x_i^2 are minimised exactly per variable; every other
// monomial is bounded on its own.
Rational centred_bound(const Polynomial& q, const QVector& radius) {
  const std::size_t n = radius.size();
  Rational lower = q.coefficient(MultiIndex::zero(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& r = radius[i];
    if (sgn(r) == 0) continue;
    const Rational a = q.coefficient(MultiIndex::unit(n, i));
    const Rational b = q.coefficient(MultiIndex::unit(n, i) + MultiIndex::unit(n, i));
    if (sgn(b) > 0 && abs_value(a) <= 2 * b * r)
      lower -= a * a / (4 * b);
    else
      lower += b * r * r - abs_value(a) * r;
  }
  for (const auto& [beta, c] : q.terms()) {
    const unsigned d = beta.degree();
    if (d == 0) continue;
    Rational rb = 1;
    bool even = true;
    std::size_t support = 0;
    for (std::size_t i = 0; i < n && sgn(rb) != 0; ++i) {
      if (beta[i] == 0) continue;
      ++support;
      rb *= pow(radius[i], beta[i]);
      if (beta[i] % 2) even = false;
    }
    if (sgn(rb) == 0 || (support == 1 && d <= 2)) continue;
    if (even) {
      if (sgn(c) < 0) lower += c * rb;
    } else {
      lower -= abs_value(c) * rb;
    }
  }
  return lower;
}

QVector radius_of(const Box& b) {
  QVector r(b.lo.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (b.hi[i] - b.lo[i]) / 2;
  return r;
}

QVector centre_of(const Box& b) {
  QVector c(b.lo.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (b.lo[i] + b.hi[i]) / 2;
  return c;
}

std::optional<QVector> kernel_witness(const SymbolOperator& a, const QVector& xi) {
  Subspace k = kernel_basis(a.evaluate(xi));
  if (k.is_zero()) return std::nullopt;
  return k.basis_vector(0);
}

// Points of {1, 0, -1}^n whose first nonzero coordinate is 1, in
// lexicographic order with 1 < 0 < -1 per coordinate.
std::vector<QVector> unit_grid(std::size_t n) {
  std::vector<QVector> out;
  std::vector<int> digit(n, 0);  // 0 -> 1, 1 -> 0, 2 -> -1
  static const int value[3] = {1, 0, -1};
  for (;;) {
    int first = 0;
    for (std::size_t i = 0; i < n && first == 0; ++i) first = value[digit[i]];
    if (first == 1) {
      QVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = value[digit[i]];
      out.push_back(std::move(v));
    }
    std::size_t p = n;
    while (p > 0 && digit[p - 1] == 2) digit[--p] = 0;
    if (p == 0) break;
    ++digit[p - 1];
  }
  return out;
}

EllipticityVerdict not_elliptic(QVector xi, QVector v) {
  EllipticityVerdict out;
  out.status = EllipticStatus::NotElliptic;
  out.direction = std::move(xi);
  out.kernel_vector = std::move(v);
  return out;
}

// Low-height points near a box that failed at the maximum depth.
std::vector<QVector> hunting_points(const Box& b) {
  const std::size_t n = b.lo.size();
  std::vector<QVector> pts;
  QVector simple(n), centre(n);
  for (std::size_t i = 0; i < n; ++i) {
    simple[i] = simplest_between(b.lo[i], b.hi[i]);
    centre[i] = (b.lo[i] + b.hi[i]) / 2;
  }
  pts.push_back(simple);
  pts.push_back(centre);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (i != b.axis) free.push_back(i);
  for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
    QVector c = b.lo;
    for (std::size_t j = 0; j < free.size(); ++j) c[free[j]] = (mask & (1u << j)) ? b.lo[free[j]] : b.hi[free[j]];
    pts.push_back(std::move(c));
  }
  return pts;
}

}  // namespace

Rational centered_lower_bound(const Polynomial& p, const QVector& lo, const QVector& hi) {
  Box b{0, 1, lo, hi, 0};
  return centred_bound(p.shifted(centre_of(b)), radius_of(b));
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
  // 0 < lo <= hi
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  const Rational f(fl);
  return f + 1 / simplest_between(1 / (hi - f), 1 / (lo - f));
}

EllipticityVerdict check_ellipticity(const SymbolOperator& a, const EllipticityOptions& opts) {
  const std::size_t n = a.n();
  QVector e1(n);
  e1[0] = 1;
  if (a.is_zero() || a.dim_v() > a.dim_e()) {
    auto v = kernel_witness(a, e1);
    if (!v) fail(ErrorCode::Internal, "expected a kernel for a non-injective shape");
    return not_elliptic(e1, *v);
  }

  for (const auto& xi : unit_grid(n))
    if (auto v = kernel_witness(a, xi)) return not_elliptic(xi, *v);

  const Polynomial det = poly_det(a.gram());
  EllipticityVerdict out;
  out.status = EllipticStatus::Elliptic;

  for (std::size_t axis = 0; axis < n; ++axis) {
    Box face{axis, 1, QVector(n, -1), QVector(n, 1), 0};
    face.lo[axis] = 1;
    // the pinned variable is substituted; the face centre is the origin elsewhere
    struct Pending {
      Box box;
      Polynomial centred;
    };
    std::vector<Pending> stack;
    stack.push_back({face, det.with_fixed(axis, 1)});
    std::vector<CertifiedBox> certified;
    while (!stack.empty()) {
      Pending cur = std::move(stack.back());
      stack.pop_back();
      const Box& b = cur.box;
      if (++out.boxes_examined > opts.box_budget) {
        out.status = EllipticStatus::Undecided;
        out.failing_box = b;
        out.cover.clear();
        return out;
      }
      out.depth_reached = std::max(out.depth_reached, b.depth);
      const QVector radius = radius_of(b);
      const Rational lower = centred_bound(cur.centred, radius);
      if (sgn(lower) > 0) {
        certified.push_back({b, lower});
        continue;
      }
      if (sgn(cur.centred.coefficient(MultiIndex::zero(n))) == 0)
        if (auto v = kernel_witness(a, centre_of(b))) return not_elliptic(centre_of(b), *v);
      if (b.depth >= opts.max_depth) {
        for (const auto& p : hunting_points(b))
          if (auto v = kernel_witness(a, p)) return not_elliptic(p, *v);
        out.status = EllipticStatus::Undecided;
        out.failing_box = b;
        out.cover.clear();
        return out;
      }
      // bisect the widest free side, lowest index on ties
      std::size_t split = n;
      for (std::size_t i = 0; i < n; ++i)
        if (i != axis && (split == n || radius[i] > radius[split])) split = i;
      if (split == n) fail(ErrorCode::Internal, "point face cannot be subdivided");
      const Rational mid = (b.lo[split] + b.hi[split]) / 2;
      const Rational quarter = radius[split] / 2;
      QVector step(n);
      Pending left{b, {}}, right{b, {}};
      left.box.hi[split] = mid;
      right.box.lo[split] = mid;
      left.box.depth = right.box.depth = b.depth + 1;
      step[split] = quarter;
      right.centred = cur.centred.shifted(step);
      step[split] = -quarter;
      left.centred = cur.centred.shifted(step);
      stack.push_back(std::move(right));
      stack.push_back(std::move(left));
    }
    // det(G) is homogeneous of even degree, so the opposite face is the mirror
    for (const auto& cb : certified) out.cover.push_back(cb);
    for (const auto& cb : certified) {
      Box m = cb.box;
      m.sign = -1;
      for (std::size_t i = 0; i < n; ++i) {
        m.lo[i] = -cb.box.hi[i];
        m.hi[i] = -cb.box.lo[i];
      }
      out.cover.push_back({std::move(m), cb.lower_bound});
    }
  }
  return out;
}

std::string to_string(EllipticStatus s) {
  switch (s) {
    case EllipticStatus::Elliptic: return "ELLIPTIC";
    case EllipticStatus::NotElliptic: return "NOT_ELLIPTIC";
    case EllipticStatus::Undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

}  // namespace symcan
