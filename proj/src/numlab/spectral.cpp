#include "numlab/spectral.hpp"

#include <cmath>

#include "core/error.hpp"

namespace symcan {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::complex<double> two_pi_i_pow(unsigned k) {
  static const std::complex<double> unit[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return unit[k % 4] * std::pow(kTwoPi, static_cast<double>(k));
}

double multinomial(const MultiIndex& alpha) {
  double num = std::tgamma(static_cast<double>(alpha.degree()) + 1);
  for (std::size_t i = 0; i < alpha.size(); ++i) num /= std::tgamma(static_cast<double>(alpha[i]) + 1);
  return num;
}

}  // namespace

CompiledPolyMatrix::CompiledPolyMatrix(const PolyMatrix& p) : rows_(p.rows()), cols_(p.cols()), nvars_(p.nvars()) {
  if (nvars_ > 4) fail(ErrorCode::Domain, "numerical evaluation supports at most 4 variables");
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      for (const auto& [alpha, coeff] : p(r, c).terms()) {
        Term t{r * cols_ + c, coeff.get_d(), {0, 0, 0, 0}};
        for (std::size_t i = 0; i < nvars_; ++i) {
          t.exps[i] = alpha[i];
          max_exp_ = std::max(max_exp_, alpha[i]);
        }
        terms_.push_back(t);
      }
}

CompiledPolyMatrix::CompiledPolyMatrix(const SymbolOperator& a) : CompiledPolyMatrix(a.to_polymatrix()) {}

void CompiledPolyMatrix::evaluate(const double* xi, double* out) const {
  std::fill(out, out + rows_ * cols_, 0.0);
  double pw[4][32];
  if (max_exp_ >= 32) fail(ErrorCode::Domain, "polynomial degree too high for numerical evaluation");
  for (std::size_t i = 0; i < nvars_; ++i) {
    pw[i][0] = 1;
    for (unsigned e = 1; e <= max_exp_; ++e) pw[i][e] = pw[i][e - 1] * xi[i];
  }
  for (const auto& t : terms_) {
    double v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) v *= pw[i][t.exps[i]];
    out[t.entry] += v;
  }
}

Spectrum apply_multiplier(const Spectrum& in, const GridSpec& g, std::size_t dim_out, const Multiplier& m) {
  const std::size_t size = g.size();
  for (const auto& c : in)
    if (c.size() != size) fail(ErrorCode::Shape, "spectrum size does not match the grid");
  Spectrum out(dim_out, std::vector<std::complex<double>>(size));
  std::vector<std::complex<double>> a(in.size()), b(dim_out);
  double xi[4];
  for (std::size_t i = 0; i < size; ++i) {
    g.frequency(i, xi);
    for (std::size_t c = 0; c < in.size(); ++c) a[c] = in[c][i];
    m(xi, a.data(), b.data());
    for (std::size_t c = 0; c < dim_out; ++c) out[c][i] = b[c];
  }
  return out;
}

Spectrum apply_symbol(const SymbolOperator& a, const Spectrum& u, const GridSpec& g) {
  if (u.size() != a.dim_v()) fail(ErrorCode::Shape, "field has " + std::to_string(u.size()) + " components, operator expects " + std::to_string(a.dim_v()));
  if (g.n != a.n()) fail(ErrorCode::Shape, "grid dimension does not match the operator");
  const CompiledPolyMatrix sym(a);
  const std::complex<double> factor = two_pi_i_pow(a.order());
  std::vector<double> m(a.dim_e() * a.dim_v());
  const std::size_t dv = a.dim_v(), de = a.dim_e();
  return apply_multiplier(u, g, de, [&](const double* xi, const std::complex<double>* in, std::complex<double>* out) {
    sym.evaluate(xi, m.data());
    for (std::size_t r = 0; r < de; ++r) {
      std::complex<double> s = 0;
      for (std::size_t c = 0; c < dv; ++c) s += m[r * dv + c] * in[c];
      out[r] = factor * s;
    }
  });
}

GridField apply_symbol(const SymbolOperator& a, const GridField& u) {
  Fft fft(u.grid);
  return fft.inverse(apply_symbol(a, fft.forward(u), u.grid));
}

std::vector<double> derivative_magnitude(const Spectrum& u, const GridSpec& g, unsigned l) {
  Fft fft(g);
  const std::size_t size = g.size();
  std::vector<double> acc(size, 0.0);
  const std::complex<double> factor = two_pi_i_pow(l);
  for (const auto& alpha : multi_indices_of_degree(g.n, l)) {
    const double w = multinomial(alpha);
    for (const auto& comp : u) {
      std::vector<std::complex<double>> d(size);
      double xi[4];
      for (std::size_t i = 0; i < size; ++i) {
        g.frequency(i, xi);
        double mono = 1;
        for (std::size_t a = 0; a < g.n; ++a)
          for (unsigned e = 0; e < alpha[a]; ++e) mono *= xi[a];
        d[i] = factor * mono * comp[i];
      }
      std::vector<double> v = fft.inverse(d);
      for (std::size_t i = 0; i < size; ++i) acc[i] += w * v[i] * v[i];
    }
  }
  for (auto& x : acc) x = std::sqrt(x);
  return acc;
}

std::vector<double> derivative_magnitude(const GridField& u, unsigned l) {
  Fft fft(u.grid);
  return derivative_magnitude(fft.forward(u), u.grid, l);
}

}  // namespace symcan
