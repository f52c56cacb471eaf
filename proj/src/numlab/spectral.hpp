#pragma once

#include <complex>
#include <functional>

#include "core/symbol.hpp"
#include "numlab/grid.hpp"

namespace symcan {

// Double-precision evaluator for a polynomial matrix, built once from exact data.
class CompiledPolyMatrix {
 public:
  CompiledPolyMatrix() = default;
  explicit CompiledPolyMatrix(const PolyMatrix& p);
  explicit CompiledPolyMatrix(const SymbolOperator& a);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  // Row-major values at xi (length nvars) written to out.
  void evaluate(const double* xi, double* out) const;

 private:
  struct Term {
    std::size_t entry;
    double coeff;
    unsigned exps[4];
  };
  std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
  unsigned max_exp_ = 0;
  std::vector<Term> terms_;
};

// Per-frequency map from dim_in spectral values to dim_out spectral values.
using Multiplier = std::function<void(const double* xi, const std::complex<double>* in, std::complex<double>* out)>;

Spectrum apply_multiplier(const Spectrum& in, const GridSpec& g, std::size_t dim_out, const Multiplier& m);

// Multiplier (2 pi i)^k A(xi) applied componentwise.
Spectrum apply_symbol(const SymbolOperator& a, const Spectrum& u, const GridSpec& g);
GridField apply_symbol(const SymbolOperator& a, const GridField& u);

// Pointwise |D^l u| = (sum_alpha l!/alpha! sum_c |d^alpha u_c|^2)^{1/2}.
std::vector<double> derivative_magnitude(const Spectrum& u, const GridSpec& g, unsigned l);
std::vector<double> derivative_magnitude(const GridField& u, unsigned l);

}  // namespace symcan
