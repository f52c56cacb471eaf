#include "core/polymatrix.hpp"

#include <bit>
#include <cstdint>

#include "core/error.hpp"

namespace symcan {

PolyMatrix PolyMatrix::constant(const QMatrix& m, std::size_t nvars) {
  PolyMatrix out(m.rows(), m.cols(), nvars);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Polynomial::constant(nvars, m(i, j));
  return out;
}

PolyMatrix PolyMatrix::scalar_identity(std::size_t size, const Polynomial& p) {
  PolyMatrix out(size, size, p.nvars());
  for (std::size_t i = 0; i < size; ++i) out(i, i) = p;
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_homogeneous(unsigned d) const {
  for (const auto& p : data_)
    if (!p.is_homogeneous(d)) return false;
  return true;
}

std::size_t PolyMatrix::term_count() const {
  std::size_t c = 0;
  for (const auto& p : data_) c += p.term_count();
  return c;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, n_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
  if (cols_ != rhs.rows_ || n_ != rhs.n_) fail(ErrorCode::Shape, "polynomial matrix product shape mismatch");
  PolyMatrix out(rows_, rhs.cols_, n_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Polynomial& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Polynomial& b = rhs(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || n_ != rhs.n_)
    fail(ErrorCode::Shape, "polynomial matrix sum shape mismatch");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || n_ != rhs.n_)
    fail(ErrorCode::Shape, "polynomial matrix difference shape mismatch");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

PolyMatrix PolyMatrix::scaled(const Rational& s) const {
  PolyMatrix out = *this;
  for (auto& p : out.data_) p = p.scaled(s);
  return out;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& s) const {
  if (s.nvars() != n_) fail(ErrorCode::Shape, "polynomial scalar variable count mismatch");
  PolyMatrix out = *this;
  for (auto& p : out.data_) p = p * s;
  return out;
}

PolyMatrix PolyMatrix::apply(const QVector& v) const {
  if (v.size() != cols_) fail(ErrorCode::Shape, "polynomial matrix-vector shape mismatch");
  PolyMatrix out(rows_, 1, n_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(v[j]) != 0) out(i, 0) += (*this)(i, j).scaled(v[j]);
  return out;
}

QMatrix PolyMatrix::evaluate(const QVector& xi) const {
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).evaluate(xi);
  return out;
}

namespace {

// det of the submatrix with the given rows and columns (equal counts).
Polynomial minor_det(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  const std::size_t n = m.nvars();
  if (k == 0) return Polynomial::constant(n, 1);
  if (k > 24) fail(ErrorCode::Budget, "determinant size exceeds supported limit");
  // f[S]: signed sum over assignments of the first popcount(S) rows to the
  // columns in S.
  std::vector<Polynomial> f(std::size_t{1} << k, Polynomial(n));
  std::vector<bool> live(f.size(), false);
  f[0] = Polynomial::constant(n, 1);
  live[0] = true;
  for (std::uint32_t s = 0; s < f.size(); ++s) {
    if (!live[s] || f[s].is_zero()) continue;
    const std::size_t r = static_cast<std::size_t>(std::popcount(s));
    if (r == k) continue;
    for (std::size_t c = 0; c < k; ++c) {
      if (s & (1u << c)) continue;
      const Polynomial& a = m(rows[r], cols[c]);
      if (a.is_zero()) continue;
      // one transposition per already used column to the right of c
      const int above = std::popcount(s >> (c + 1));
      Polynomial term = f[s] * a;
      const std::uint32_t t = s | (1u << c);
      if (above & 1) f[t] -= term;
      else f[t] += term;
      live[t] = true;
    }
  }
  return f.back();
}

}  // namespace

Polynomial poly_det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::Shape, "determinant of non-square polynomial matrix");
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return minor_det(m, idx, idx);
}

PolyMatrix poly_adjugate(const PolyMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::Shape, "adjugate of non-square polynomial matrix");
  const std::size_t k = m.rows();
  PolyMatrix adj(k, k, m.nvars());
  if (k == 1) {
    adj(0, 0) = Polynomial::constant(m.nvars(), 1);
    return adj;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t r = 0; r < k; ++r)
        if (r != j) rows.push_back(r);
      for (std::size_t c = 0; c < k; ++c)
        if (c != i) cols.push_back(c);
      Polynomial d = minor_det(m, rows, cols);
      adj(i, j) = ((i + j) % 2) ? -d : d;
    }
  }
  return adj;
}

std::map<MultiIndex, QMatrix> coefficient_matrices(const PolyMatrix& p) {
  std::map<MultiIndex, QMatrix> out;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      for (const auto& [alpha, c] : p(i, j).terms()) {
        auto it = out.try_emplace(alpha, p.rows(), p.cols()).first;
        it->second(i, j) = c;
      }
  return out;
}

}  // namespace symcan
