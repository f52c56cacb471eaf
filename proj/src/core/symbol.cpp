#include "core/symbol.hpp"

#include "core/error.hpp"

namespace symcan {

SymbolOperator::SymbolOperator(std::size_t n, std::size_t dim_v, std::size_t dim_e, unsigned order,
                               Terms terms, ZeroPolicy zero)
    : n_(n), dim_v_(dim_v), dim_e_(dim_e), order_(order) {
  if (n == 0) fail(ErrorCode::Validation, "ambient dimension n must be positive");
  if (dim_v == 0 || dim_e == 0) fail(ErrorCode::Validation, "dimV and dimE must be positive");
  for (auto& [alpha, m] : terms) {
    if (alpha.size() != n)
      fail(ErrorCode::Validation, "multi-index " + alpha.str() + " has length " + std::to_string(alpha.size()) +
                                      ", expected " + std::to_string(n));
    if (alpha.degree() != order)
      fail(ErrorCode::Validation, "multi-index " + alpha.str() + " has degree " + std::to_string(alpha.degree()) +
                                      ", expected order " + std::to_string(order));
    if (m.rows() != dim_e || m.cols() != dim_v)
      fail(ErrorCode::Validation, "coefficient matrix for " + alpha.str() + " is " + std::to_string(m.rows()) + "x" +
                                      std::to_string(m.cols()) + ", expected " + std::to_string(dim_e) + "x" +
                                      std::to_string(dim_v));
    if (!m.is_zero()) terms_.emplace(alpha, std::move(m));
  }
  if (terms_.empty() && zero == ZeroPolicy::Reject) fail(ErrorCode::Validation, "operator has no nonzero term");
}

SymbolOperator SymbolOperator::from_polymatrix(const PolyMatrix& p, unsigned order, ZeroPolicy zero) {
  if (!p.is_homogeneous(order)) fail(ErrorCode::Validation, "polynomial matrix is not homogeneous of the given order");
  return SymbolOperator(p.nvars(), p.cols(), p.rows(), order, coefficient_matrices(p), zero);
}

QMatrix SymbolOperator::evaluate(const QVector& xi) const {
  if (xi.size() != n_) fail(ErrorCode::Shape, "frequency has wrong dimension");
  QMatrix out(dim_e_, dim_v_);
  for (const auto& [alpha, m] : terms_) {
    Rational mono = 1;
    for (std::size_t i = 0; i < n_ && sgn(mono) != 0; ++i)
      if (alpha[i]) mono *= pow(xi[i], alpha[i]);
    if (sgn(mono) == 0) continue;
    out = out + m.scaled(mono);
  }
  return out;
}

std::vector<double> SymbolOperator::evaluate_real(const std::vector<double>& xi) const {
  if (xi.size() != n_) fail(ErrorCode::Shape, "frequency has wrong dimension");
  std::vector<double> out(dim_e_ * dim_v_, 0.0);
  for (const auto& [alpha, m] : terms_) {
    double mono = 1.0;
    for (std::size_t i = 0; i < n_; ++i)
      for (unsigned k = 0; k < alpha[i]; ++k) mono *= xi[i];
    if (mono == 0.0) continue;
    for (std::size_t i = 0; i < dim_e_; ++i)
      for (std::size_t j = 0; j < dim_v_; ++j) out[i * dim_v_ + j] += mono * m(i, j).get_d();
  }
  return out;
}

PolyMatrix SymbolOperator::to_polymatrix() const {
  PolyMatrix p(dim_e_, dim_v_, n_);
  for (const auto& [alpha, m] : terms_)
    for (std::size_t i = 0; i < dim_e_; ++i)
      for (std::size_t j = 0; j < dim_v_; ++j) p(i, j).add_term(alpha, m(i, j));
  return p;
}

PolyMatrix SymbolOperator::gram() const {
  PolyMatrix a = to_polymatrix();
  return a.transpose() * a;
}

SymbolOperator SymbolOperator::composed(const QMatrix& m, const QMatrix& nmat) const {
  if (m.cols() != dim_e_ || nmat.rows() != dim_v_) fail(ErrorCode::Shape, "composition shape mismatch");
  Terms t;
  for (const auto& [alpha, a] : terms_) t.emplace(alpha, m * a * nmat);
  return SymbolOperator(n_, nmat.cols(), m.rows(), order_, std::move(t), ZeroPolicy::Allow);
}

SymbolOperator SymbolOperator::left_composed(const QMatrix& m) const {
  return composed(m, QMatrix::identity(dim_v_));
}

SymbolOperator SymbolOperator::scaled(const Rational& s) const {
  Terms t;
  for (const auto& [alpha, a] : terms_) t.emplace(alpha, a.scaled(s));
  return SymbolOperator(n_, dim_v_, dim_e_, order_, std::move(t), ZeroPolicy::Allow);
}

PolyMatrix symbol_to_polymatrix(const SymbolOperator& a) { return a.to_polymatrix(); }
PolyMatrix gram(const SymbolOperator& a) { return a.gram(); }

}  // namespace symcan
