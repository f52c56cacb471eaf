#pragma once

#include <cstdint>
#include <vector>

#include "core/linalg.hpp"
#include "core/symbol.hpp"

namespace symcan {

struct KernelCheck {
  QVector xi;
  bool kernel_equals_image = false;
  std::size_t image_dim = 0;
  bool injective = false;  // dim image A(xi) == dimV
};

struct AnnihilatorReport {
  bool identity_holds = false;  // L A == 0 as a polynomial identity
  std::vector<KernelCheck> samples;
  bool kernels_match() const;
  bool ranks_full() const;
};

struct AnnihilatorResult {
  SymbolOperator l;
  bool identity_checked = false;
  std::vector<KernelCheck> sampled_kernel_checks;
};

struct CompatOptions {
  // Refuse when dimE^2 * (monomials of degree 2k dimV) exceeds this.
  double term_budget = 2e6;
  std::size_t samples = 8;
  std::uint64_t seed = 1;
};

double predicted_term_count(const SymbolOperator& a);

// L = det(G) Id - A adj(G) A^T with G = A^T A.
AnnihilatorResult build_annihilator(const SymbolOperator& a, const CompatOptions& opts = {});

AnnihilatorReport verify_annihilator(const SymbolOperator& a, const SymbolOperator& l,
                                     const std::vector<QVector>& directions);
AnnihilatorReport verify_annihilator(const SymbolOperator& a, const SymbolOperator& l,
                                     const CompatOptions& opts = {});

// (g, h) -> (|xi|^{2(m-1)} d*d g, |xi|^{2(m-1)} d d* h) for the Hodge pair on
// degree-l forms, with g of degree l+1 and h of degree l-1.
SymbolOperator hodge_remark_annihilator(std::size_t n, std::size_t degree, unsigned m = 1);

}  // namespace symcan
