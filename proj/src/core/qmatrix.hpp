#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "core/rational.hpp"

namespace symcan {

using QVector = std::vector<Rational>;

// Dense row-major rational matrix. Zero-sized dimensions are allowed so that
// bases of the zero subspace are representable (ambient x 0).
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix column(const QVector& v);
  static QMatrix row(const QVector& v);
  // Columns given as vectors, all of length `ambient`.
  static QMatrix from_columns(std::size_t ambient, const std::vector<QVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> data() const { return data_; }

  QVector col(std::size_t j) const;
  QVector row_vector(std::size_t i) const;

  QMatrix transpose() const;
  bool is_zero() const;

  QMatrix operator*(const QMatrix& rhs) const;
  QVector operator*(const QVector& v) const;
  QMatrix operator+(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;
  QMatrix scaled(const Rational& s) const;

  // [this | rhs] and [this ; rhs].
  QMatrix hstack(const QMatrix& rhs) const;
  QMatrix vstack(const QMatrix& rhs) const;
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool operator==(const QMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

bool is_zero_vector(const QVector& v);

}  // namespace symcan
