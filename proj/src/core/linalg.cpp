#include "core/linalg.hpp"

#include <utility>

#include "core/error.hpp"

namespace symcan {

RowEchelon rref(QMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

Subspace Subspace::span(const QMatrix& generators) {
  Subspace s(generators.rows());
  if (generators.cols() == 0 || generators.rows() == 0) return s;
  RowEchelon e = rref(generators.transpose());
  const std::size_t d = e.pivots.size();
  s.basis_ = QMatrix(generators.rows(), d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < generators.rows(); ++i) s.basis_(i, j) = e.reduced(j, i);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<QVector>& vectors) {
  return span(QMatrix::from_columns(ambient, vectors));
}

Subspace Subspace::full(std::size_t ambient) { return span(QMatrix::identity(ambient)); }

bool Subspace::contains(const QVector& v) const {
  if (v.size() != ambient_) fail(ErrorCode::Shape, "vector/subspace ambient mismatch");
  if (is_zero_vector(v)) return true;
  // Canonical basis: coordinate j of v along basis column j sits at pivot row.
  QVector residual = v;
  for (std::size_t j = 0; j < dim(); ++j) {
    std::size_t pivot = 0;
    while (sgn(basis_(pivot, j)) == 0) ++pivot;
    const Rational c = residual[pivot];
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i < ambient_; ++i) residual[i] -= c * basis_(i, j);
  }
  return is_zero_vector(residual);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t j = 0; j < other.dim(); ++j)
    if (!contains(other.basis_vector(j))) return false;
  return true;
}

Subspace kernel_basis(const QMatrix& m) {
  const std::size_t cols = m.cols();
  if (m.rows() == 0) return Subspace::full(cols);
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<QVector> gens;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(cols, gens);
}

Subspace image(const QMatrix& m) { return Subspace::span(m); }

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) fail(ErrorCode::Shape, "subspace ambient mismatch");
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient());
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  QMatrix stacked = a.basis().hstack(b.basis().scaled(-1));
  Subspace k = kernel_basis(stacked);
  const QMatrix& ka = k.basis();
  QMatrix coeffs = ka.block(0, 0, a.dim(), ka.cols());
  return Subspace::span(a.basis() * coeffs);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) fail(ErrorCode::Shape, "subspace ambient mismatch");
  return Subspace::span(a.basis().hstack(b.basis()));
}

Subspace orthogonal_complement(const Subspace& s) {
  if (s.is_zero()) return Subspace::full(s.ambient());
  return kernel_basis(s.basis().transpose());
}

std::optional<QVector> solve_exact(const QMatrix& m, const QVector& b) {
  if (m.rows() != b.size()) fail(ErrorCode::Shape, "solve_exact: right-hand side length mismatch");
  RowEchelon e = rref(m.hstack(QMatrix::column(b)));
  const std::size_t cols = m.cols();
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  QVector x(cols);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, cols);
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::Shape, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RowEchelon e = rref(m.hstack(QMatrix::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

std::optional<QMatrix> left_inverse(const QMatrix& m) {
  QMatrix mt = m.transpose();
  auto g = inverse(mt * m);
  if (!g) return std::nullopt;
  return *g * mt;
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::Shape, "determinant of non-square matrix");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

}  // namespace symcan
