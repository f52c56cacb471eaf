#include "compat/compat.hpp"

#include <algorithm>
#include <cmath>

#include "catalog/forms.hpp"
#include "core/error.hpp"
#include "deciders/deciders.hpp"

namespace symcan {

bool AnnihilatorReport::kernels_match() const {
  return std::all_of(samples.begin(), samples.end(), [](const KernelCheck& k) { return k.kernel_equals_image; });
}

bool AnnihilatorReport::ranks_full() const {
  return std::all_of(samples.begin(), samples.end(), [](const KernelCheck& k) { return k.injective; });
}

double predicted_term_count(const SymbolOperator& a) {
  const double deg = 2.0 * a.order() * static_cast<double>(a.dim_v());
  const double n = static_cast<double>(a.n());
  // C(deg + n - 1, n - 1)
  const double monomials = std::exp(std::lgamma(deg + n) - std::lgamma(n) - std::lgamma(deg + 1));
  const double e = static_cast<double>(a.dim_e());
  return e * e * std::round(monomials);
}

AnnihilatorResult build_annihilator(const SymbolOperator& a, const CompatOptions& opts) {
  const double predicted = predicted_term_count(a);
  if (predicted > opts.term_budget)
    fail(ErrorCode::Budget, "annihilator would need about " + std::to_string(static_cast<long long>(predicted)) +
                                " monomial entries, over the budget of " +
                                std::to_string(static_cast<long long>(opts.term_budget)));
  const PolyMatrix p = a.to_polymatrix();
  const PolyMatrix g = p.transpose() * p;
  const PolyMatrix proj = p * (poly_adjugate(g) * p.transpose());
  const PolyMatrix l = PolyMatrix::scalar_identity(a.dim_e(), poly_det(g)) - proj;
  AnnihilatorResult out;
  out.l = SymbolOperator::from_polymatrix(l, 2 * a.order() * static_cast<unsigned>(a.dim_v()),
                                          SymbolOperator::ZeroPolicy::Allow);
  AnnihilatorReport rep = verify_annihilator(a, out.l, opts);
  out.identity_checked = rep.identity_holds;
  out.sampled_kernel_checks = std::move(rep.samples);
  return out;
}

AnnihilatorReport verify_annihilator(const SymbolOperator& a, const SymbolOperator& l,
                                     const std::vector<QVector>& directions) {
  if (l.dim_v() != a.dim_e()) fail(ErrorCode::Shape, "L must act on the target space of A");
  if (l.n() != a.n()) fail(ErrorCode::Shape, "A and L have different numbers of variables");
  AnnihilatorReport rep;
  rep.identity_holds = (l.to_polymatrix() * a.to_polymatrix()).is_zero();
  for (const auto& xi : directions) {
    if (xi.size() != a.n()) fail(ErrorCode::Shape, "sample direction has wrong dimension");
    KernelCheck k;
    k.xi = xi;
    const Subspace im = image(a.evaluate(xi));
    k.image_dim = im.dim();
    k.injective = im.dim() == a.dim_v();
    k.kernel_equals_image = kernel_basis(l.evaluate(xi)) == im;
    rep.samples.push_back(std::move(k));
  }
  return rep;
}

AnnihilatorReport verify_annihilator(const SymbolOperator& a, const SymbolOperator& l,
                                     const CompatOptions& opts) {
  return verify_annihilator(a, l, sample_directions(a.n(), opts.samples, opts.seed));
}

namespace {

// sum_i xi_i m_i
PolyMatrix linear_symbol(std::size_t n, const std::vector<QMatrix>& m) {
  PolyMatrix out(m[0].rows(), m[0].cols(), n);
  for (std::size_t i = 0; i < n; ++i)
    out = out + PolyMatrix::constant(m[i], n).scaled(Polynomial::variable(n, i));
  return out;
}

// xi ^ . from degree l to l+1, or the zero map when l+1 > n
PolyMatrix wedge_symbol(std::size_t n, std::size_t degree) {
  if (degree + 1 > n) return PolyMatrix(0, binomial(n, degree), n);
  std::vector<QMatrix> m;
  for (std::size_t i = 0; i < n; ++i) m.push_back(wedge_basis_matrix(n, degree, i));
  return linear_symbol(n, m);
}

// *(xi ^ *.) from degree l to l-1
PolyMatrix codiff_symbol(std::size_t n, std::size_t degree) {
  if (degree == 0) return PolyMatrix(0, 1, n);
  std::vector<QMatrix> m;
  for (std::size_t i = 0; i < n; ++i) m.push_back(codifferential_basis_matrix(n, degree, i));
  return linear_symbol(n, m);
}

}  // namespace

SymbolOperator hodge_remark_annihilator(std::size_t n, std::size_t degree, unsigned m) {
  if (degree < 1 || degree >= n) fail(ErrorCode::Domain, "form degree must lie in 1..n-1");
  if (m < 1) fail(ErrorCode::Domain, "m must be at least 1");
  const std::size_t top = binomial(n, degree + 1), bottom = binomial(n, degree - 1);
  // d*d on degree l+1 and d d* on degree l-1
  PolyMatrix upper(top, top, n), lower(bottom, bottom, n);
  if (degree + 2 <= n) upper = codiff_symbol(n, degree + 2) * wedge_symbol(n, degree + 1);
  if (degree >= 2) lower = wedge_symbol(n, degree - 2) * codiff_symbol(n, degree - 1);
  Polynomial r2(n);
  for (std::size_t i = 0; i < n; ++i) r2 += Polynomial::variable(n, i).pow(2);
  const Polynomial lap = r2.pow(m - 1);
  PolyMatrix l(top + bottom, top + bottom, n);
  for (std::size_t i = 0; i < top; ++i)
    for (std::size_t j = 0; j < top; ++j) l(i, j) = upper(i, j) * lap;
  for (std::size_t i = 0; i < bottom; ++i)
    for (std::size_t j = 0; j < bottom; ++j) l(top + i, top + j) = lower(i, j) * lap;
  return SymbolOperator::from_polymatrix(l, 2 * m, SymbolOperator::ZeroPolicy::Allow);
}

}  // namespace symcan
