#include "core/qmatrix.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace symcan {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorCode::Shape, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::column(const QVector& v) {
  QMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

QMatrix QMatrix::row(const QVector& v) {
  QMatrix m(1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
  return m;
}

QMatrix QMatrix::from_columns(std::size_t ambient, const std::vector<QVector>& cols) {
  QMatrix m(ambient, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != ambient) fail(ErrorCode::Shape, "column length mismatch");
    for (std::size_t i = 0; i < ambient; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

QVector QMatrix::col(std::size_t j) const {
  QVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

QVector QMatrix::row_vector(std::size_t i) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(ErrorCode::Shape, "matrix product shape mismatch");
  QMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (sgn(b) != 0) out(i, j) += a * b;
      }
    }
  return out;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (cols_ != v.size()) fail(ErrorCode::Shape, "matrix-vector shape mismatch");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (sgn(v[k]) != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorCode::Shape, "matrix sum shape mismatch");
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorCode::Shape, "matrix difference shape mismatch");
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

QMatrix QMatrix::scaled(const Rational& s) const {
  QMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

QMatrix QMatrix::hstack(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_) fail(ErrorCode::Shape, "hstack row mismatch");
  QMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
  }
  return out;
}

QMatrix QMatrix::vstack(const QMatrix& rhs) const {
  if (rows_ == 0 && cols_ == 0) return rhs;
  if (cols_ != rhs.cols_) fail(ErrorCode::Shape, "vstack column mismatch");
  QMatrix out(rows_ + rhs.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(rhs.data_.begin(), rhs.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorCode::Shape, "block out of range");
  QMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

bool is_zero_vector(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

}  // namespace symcan
