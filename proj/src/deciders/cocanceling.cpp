#include "deciders/deciders.hpp"

namespace symcan {

namespace {

QMatrix stacked(const SymbolOperator& l) {
  QMatrix s(0, l.dim_v());
  for (const auto& [alpha, m] : l.terms()) s = s.vstack(m);
  return s;
}

}  // namespace

std::optional<std::map<MultiIndex, QMatrix>> left_inverses(const SymbolOperator& l) {
  if (l.is_zero()) return std::nullopt;
  auto k = left_inverse(stacked(l));
  if (!k) return std::nullopt;
  std::map<MultiIndex, QMatrix> out;
  std::size_t col = 0;
  for (const auto& [alpha, m] : l.terms()) {
    out.emplace(alpha, k->block(0, col, k->rows(), m.rows()));
    col += m.rows();
  }
  return out;
}

CocancelingVerdict check_cocanceling(const SymbolOperator& l) {
  CocancelingVerdict v;
  v.joint_kernel = l.is_zero() ? Subspace::full(l.dim_v()) : kernel_basis(stacked(l));
  v.cocanceling = v.joint_kernel.is_zero();
  if (v.cocanceling) v.left_inverses = left_inverses(l);
  return v;
}

}  // namespace symcan
