#include "doctest.h"

#include <algorithm>

#include "core/error.hpp"
#include "core/linalg.hpp"
#include "core/symbol.hpp"
#include "gen.hpp"

using namespace symcan;

namespace {

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

SymbolOperator gradient2() {
  PolyMatrix p(2, 1, 2);
  p(0, 0) = x(2, 0);
  p(1, 0) = x(2, 1);
  return SymbolOperator::from_polymatrix(p, 1);
}

SymbolOperator hyperbolic() {
  PolyMatrix p(2, 2, 2);
  p(0, 0) = x(2, 0);
  p(0, 1) = -x(2, 1);
  p(1, 0) = x(2, 1);
  p(1, 1) = -x(2, 0);
  return SymbolOperator::from_polymatrix(p, 1);
}

// Leibniz formula over all permutations; exponential but independent of the
// row-subset recursion in poly_det.
Polynomial leibniz_det(const PolyMatrix& m) {
  const std::size_t k = m.rows();
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  Polynomial total(m.nvars());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial t = Polynomial::constant(m.nvars(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < k; ++i) t = t * m(i, perm[i]);
    total += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

PolyMatrix random_polymatrix(gen::Source& g, std::size_t k, std::size_t n, unsigned d) {
  PolyMatrix m(k, k, n);
  auto monos = multi_indices_of_degree(n, d);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (const auto& a : monos)
        if (g.integer(0, 2) == 0) m(i, j).add_term(a, g.rational(4));
  return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK(to_string(parse_rational("0/5")) == "0");
}

TEST_CASE("rational parsing rejects junk") {
  for (const char* bad : {"", "1/0", "x", "1/", "/2", "1.5", "1/2/3", "4/-2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

TEST_CASE("kernel_basis examples") {
  Subspace k = kernel_basis(QMatrix{{1, 1}});
  REQUIRE(k.dim() == 1);
  CHECK(k.basis() == QMatrix{{1}, {-1}});
  CHECK(kernel_basis(QMatrix::identity(3)).is_zero());

  QMatrix a = hyperbolic().evaluate({1, 1});
  CHECK(kernel_basis(a) == Subspace::span(2, {{1, 1}}));
}

TEST_CASE("subspace intersection examples") {
  Subspace s1 = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
  Subspace s2 = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(intersection(s1, s2) == Subspace::span(3, {{0, 1, 0}}));
  CHECK(intersection(s1, s1) == s1);
  CHECK_THROWS_AS(intersection(s1, Subspace(2)), Error);

  SymbolOperator g = gradient2();
  CHECK(intersection(image(g.evaluate({1, 0})), image(g.evaluate({0, 1}))).is_zero());
}

TEST_CASE("solve_exact examples") {
  QVector b{3, Rational(-2, 7), 5};
  auto sol = solve_exact(QMatrix::identity(3), b);
  REQUIRE(sol);
  CHECK(*sol == b);
  CHECK_FALSE(solve_exact(QMatrix{{1}, {1}}, {1, 2}));
  auto grad = solve_exact(gradient2().evaluate({1, 0}), {1, 0});
  REQUIRE(grad);
  CHECK(*grad == QVector{1});
}

TEST_CASE("symbol evaluation") {
  CHECK(gradient2().evaluate({2, 3}) == QMatrix{{2}, {3}});
  PolyMatrix div(1, 2, 2);
  div(0, 0) = x(2, 0);
  div(0, 1) = x(2, 1);
  CHECK(SymbolOperator::from_polymatrix(div, 1).evaluate({2, 3}) == QMatrix{{2, 3}});
}

TEST_CASE("symbol validation") {
  SymbolOperator::Terms bad_degree;
  bad_degree.emplace(MultiIndex({2, 0}), QMatrix{{1}});
  CHECK_THROWS_AS(SymbolOperator(2, 1, 1, 1, bad_degree), Error);

  SymbolOperator::Terms bad_shape;
  bad_shape.emplace(MultiIndex({1, 0}), QMatrix{{1, 0}});
  CHECK_THROWS_AS(SymbolOperator(2, 1, 1, 1, bad_shape), Error);

  SymbolOperator::Terms zero;
  zero.emplace(MultiIndex({1, 0}), QMatrix{{0}});
  CHECK_THROWS_AS(SymbolOperator(2, 1, 1, 1, zero), Error);
  CHECK(SymbolOperator(2, 1, 1, 1, zero, SymbolOperator::ZeroPolicy::Allow).is_zero());
}

TEST_CASE("gram, det and adjugate examples") {
  SymbolOperator g = gradient2();
  PolyMatrix gr = gram(g);
  Polynomial norm2 = x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1);
  REQUIRE(gr.rows() == 1);
  CHECK(gr(0, 0) == norm2);
  CHECK(poly_det(gr) == norm2);
  CHECK(poly_adjugate(gr)(0, 0) == Polynomial::constant(2, 1));

  PolyMatrix diag(2, 2, 2);
  diag(0, 0) = x(2, 0);
  diag(1, 1) = x(2, 1);
  CHECK(poly_det(diag) == x(2, 0) * x(2, 1));
  PolyMatrix adj = poly_adjugate(diag);
  CHECK(adj(0, 0) == x(2, 1));
  CHECK(adj(1, 1) == x(2, 0));
  CHECK(adj(0, 1).is_zero());
  CHECK(adj(1, 0).is_zero());

  Polynomial d = x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1);
  CHECK(poly_det(gram(hyperbolic())) == d * d);
}

TEST_CASE("coefficient_matrices round trip and zero") {
  CHECK(coefficient_matrices(PolyMatrix(2, 3, 2)).empty());
  SymbolOperator h = hyperbolic();
  CHECK(coefficient_matrices(symbol_to_polymatrix(h)) == h.terms());
}

TEST_CASE("multi-index order is graded lexicographic") {
  auto deg2 = multi_indices_of_degree(2, 2);
  REQUIRE(deg2.size() == 3);
  CHECK(deg2[0] == MultiIndex({0, 2}));
  CHECK(deg2[1] == MultiIndex({1, 1}));
  CHECK(deg2[2] == MultiIndex({2, 0}));
  CHECK(MultiIndex({3, 0}) < MultiIndex({0, 4}));
  CHECK(multi_indices_of_degree(3, 4).size() == 15);
}

TEST_CASE("taylor shift agrees with evaluation") {
  gen::Source g(11);
  for (int t = 0; t < gen::kTrials; ++t) {
    PolyMatrix m = random_polymatrix(g, 1, 3, static_cast<unsigned>(g.integer(0, 4)));
    const Polynomial& p = m(0, 0);
    QVector c = g.vector(3), y = g.vector(3);
    QVector cy(3);
    for (int i = 0; i < 3; ++i) cy[i] = c[i] + y[i];
    CHECK(p.shifted(c).evaluate(y) == p.evaluate(cy));
  }
}

TEST_CASE("property: poly_det matches Leibniz and evaluation") {
  gen::Source g(12);
  for (int t = 0; t < gen::kTrials; ++t) {
    const std::size_t k = static_cast<std::size_t>(g.integer(1, 4));
    PolyMatrix m = random_polymatrix(g, k, 2, static_cast<unsigned>(g.integer(0, 2)));
    Polynomial d = poly_det(m);
    CHECK(d == leibniz_det(m));
    QVector pt = g.vector(2);
    CHECK(d.evaluate(pt) == determinant(m.evaluate(pt)));
  }
}

TEST_CASE("property: adj(G) G = det(G) Id for random symbols") {
  gen::Source g(13);
  for (int t = 0; t < gen::kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const std::size_t dv = static_cast<std::size_t>(g.integer(1, 3));
    const std::size_t de = static_cast<std::size_t>(g.integer(1, 3));
    SymbolOperator::Terms terms;
    for (const auto& a : multi_indices_of_degree(n, 1)) terms.emplace(a, g.matrix(de, dv, 3));
    SymbolOperator a(n, dv, de, 1, terms, SymbolOperator::ZeroPolicy::Allow);
    PolyMatrix gr = a.gram();
    CHECK(gr == gr.transpose());
    CHECK(gr.is_homogeneous(2));
    PolyMatrix lhs = poly_adjugate(gr) * gr;
    CHECK(lhs == PolyMatrix::scalar_identity(dv, poly_det(gr)));
  }
}

TEST_CASE("property: homogeneity of evaluation") {
  gen::Source g(14);
  for (int t = 0; t < gen::kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const unsigned k = static_cast<unsigned>(g.integer(1, 3));
    SymbolOperator::Terms terms;
    for (const auto& a : multi_indices_of_degree(n, k))
      if (g.integer(0, 1)) terms.emplace(a, g.matrix(2, 2, 3));
    SymbolOperator a(n, 2, 2, k, terms, SymbolOperator::ZeroPolicy::Allow);
    QVector xi = g.vector(n);
    Rational s = g.nonzero_rational();
    QVector sxi = xi;
    for (auto& v : sxi) v *= s;
    CHECK(a.evaluate(sxi) == a.evaluate(xi).scaled(pow(s, k)));
    CHECK(coefficient_matrices(a.to_polymatrix()) == a.terms());
  }
}

TEST_CASE("property: canonical subspaces of row-equivalent inputs coincide") {
  gen::Source g(15);
  for (int t = 0; t < gen::kTrials; ++t) {
    const std::size_t r = static_cast<std::size_t>(g.integer(1, 5));
    const std::size_t c = static_cast<std::size_t>(g.integer(1, 5));
    QMatrix m = g.low_rank(r, c, static_cast<std::size_t>(g.integer(0, 4)));
    QMatrix p = g.invertible(r);
    CHECK(kernel_basis(m) == kernel_basis(p * m));
    // Column operations preserve the image.
    QMatrix q = g.invertible(c);
    Subspace im = image(m);
    CHECK(im == image(m * q));
    CHECK(Subspace::span(im.basis()) == im);
    CHECK(rank(m) == rank(m.scaled(g.nonzero_rational())));
    CHECK(kernel_basis(m).dim() == c - rank(m));
    for (std::size_t j = 0; j < kernel_basis(m).dim(); ++j)
      CHECK(is_zero_vector(m * kernel_basis(m).basis_vector(j)));
  }
}

TEST_CASE("left inverse and inverse") {
  gen::Source g(16);
  for (int t = 0; t < gen::kTrials; ++t) {
    QMatrix m = g.matrix(4, 2, 5);
    auto k = left_inverse(m);
    if (rank(m) == 2) {
      REQUIRE(k);
      CHECK(*k * m == QMatrix::identity(2));
    } else {
      CHECK_FALSE(k);
    }
  }
}
