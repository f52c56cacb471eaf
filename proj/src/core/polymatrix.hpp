#pragma once

#include <map>
#include <vector>

#include "core/polynomial.hpp"
#include "core/qmatrix.hpp"

namespace symcan {

// Dense matrix of polynomials in a shared number of variables.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
      : rows_(rows), cols_(cols), n_(nvars), data_(rows * cols, Polynomial(nvars)) {}

  static PolyMatrix constant(const QMatrix& m, std::size_t nvars);
  // p * Id_size
  static PolyMatrix scalar_identity(std::size_t size, const Polynomial& p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return n_; }

  Polynomial& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_homogeneous(unsigned d) const;
  std::size_t term_count() const;

  PolyMatrix transpose() const;
  PolyMatrix operator*(const PolyMatrix& rhs) const;
  PolyMatrix operator+(const PolyMatrix& rhs) const;
  PolyMatrix operator-(const PolyMatrix& rhs) const;
  PolyMatrix scaled(const Rational& s) const;
  PolyMatrix scaled(const Polynomial& p) const;
  // Product with a constant column vector, as an n-variable column.
  PolyMatrix apply(const QVector& v) const;

  QMatrix evaluate(const QVector& xi) const;

  bool operator==(const PolyMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t n_ = 0;
  std::vector<Polynomial> data_;
};

// Real adjoint of a real symbol: the transpose.
inline PolyMatrix poly_adjoint(const PolyMatrix& p) { return p.transpose(); }
inline PolyMatrix poly_multiply(const PolyMatrix& a, const PolyMatrix& b) { return a * b; }

// Division-free determinant. Laplace expansion along rows, memoized over the
// set of used columns, so a size m matrix costs O(m 2^m) polynomial products.
Polynomial poly_det(const PolyMatrix& m);

// Classical adjoint: adj(M) M = M adj(M) = det(M) Id.
PolyMatrix poly_adjugate(const PolyMatrix& m);

// P(xi) = sum_alpha xi^alpha C_alpha. Zero coefficient matrices are omitted.
std::map<MultiIndex, QMatrix> coefficient_matrices(const PolyMatrix& p);

}  // namespace symcan
