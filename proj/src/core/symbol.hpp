#pragma once

#include <map>
#include <vector>

#include "core/polymatrix.hpp"

namespace symcan {

// Homogeneous symbol A(xi) = sum_{|alpha| = k} xi^alpha A_alpha with
// A_alpha : Q^dimV -> Q^dimE.
class SymbolOperator {
 public:
  using Terms = std::map<MultiIndex, QMatrix>;

  enum class ZeroPolicy { Reject, Allow };

  SymbolOperator() = default;
  // Validates shapes and degrees. Zero coefficient matrices are dropped; an
  // operator with no remaining term is rejected unless `zero` is Allow.
  SymbolOperator(std::size_t n, std::size_t dim_v, std::size_t dim_e, unsigned order, Terms terms,
                 ZeroPolicy zero = ZeroPolicy::Reject);

  // Inverse of to_polymatrix; every entry of `p` must be homogeneous of `order`.
  static SymbolOperator from_polymatrix(const PolyMatrix& p, unsigned order,
                                        ZeroPolicy zero = ZeroPolicy::Reject);

  std::size_t n() const { return n_; }
  std::size_t dim_v() const { return dim_v_; }
  std::size_t dim_e() const { return dim_e_; }
  unsigned order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  QMatrix evaluate(const QVector& xi) const;
  // Row-major dimE x dimV values at a floating point frequency.
  std::vector<double> evaluate_real(const std::vector<double>& xi) const;

  PolyMatrix to_polymatrix() const;
  // G = A^T A, dimV x dimV, homogeneous of degree 2k.
  PolyMatrix gram() const;

  // M A N for M: dimE' x dimE and N: dimV x dimV'.
  SymbolOperator composed(const QMatrix& m, const QMatrix& nmat) const;
  SymbolOperator left_composed(const QMatrix& m) const;
  SymbolOperator scaled(const Rational& s) const;

  bool operator==(const SymbolOperator& rhs) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t dim_v_ = 0;
  std::size_t dim_e_ = 0;
  unsigned order_ = 0;
  Terms terms_;
};

PolyMatrix symbol_to_polymatrix(const SymbolOperator& a);
PolyMatrix gram(const SymbolOperator& a);

}  // namespace symcan
