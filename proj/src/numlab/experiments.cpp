#include "numlab/experiments.hpp"

#include <cmath>
#include <array>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include "core/error.hpp"
#include "deciders/deciders.hpp"
#include "numlab/norms.hpp"

namespace symcan {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double bump(double s) { return s > 0 ? std::exp(-1.0 / s) : 0.0; }

double norm_of(const double* v, std::size_t n) {
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += v[i] * v[i];
  return std::sqrt(s);
}

double exponent_for(std::size_t n, unsigned k, unsigned l) {
  if (l >= k || k - l >= n) fail(ErrorCode::Domain, "need 0 < k - l < n for the Sobolev exponent");
  return static_cast<double>(n) / static_cast<double>(n - (k - l));
}

double l1_of(const Spectrum& s, const GridSpec& g) {
  Fft fft(g);
  GridField f = fft.inverse(s);
  return lp_norm(f, 1.0);
}

void note_tail(ExperimentTable& t) {
  double worst = 0;
  for (double v : t.column("tail")) worst = std::max(worst, v);
  if (worst > kTailTolerance) {
    std::ostringstream os;
    os << "tail violation: boundary/peak " << worst << " exceeds " << kTailTolerance;
    t.notes.push_back(os.str());
  }
}

double relative_change(double a, double b) { return std::abs(b - a) / std::max(std::abs(a), 1e-300); }

}  // namespace

double smooth_step_down(double t) {
  if (t <= 0) return 1.0;
  if (t >= 1) return 0.0;
  const double a = bump(1 - t), b = bump(t);
  return a / (a + b);
}

double smooth_step_down_derivative(double t) {
  if (t <= 0 || t >= 1) return 0.0;
  const double a = bump(1 - t), b = bump(t);
  const double da = -a / ((1 - t) * (1 - t)), db = b / (t * t);
  return (da * b - a * db) / ((a + b) * (a + b));
}

double cutoff_profile(double r) {
  if (r <= 0.5) return 1.0;
  if (r >= 2.0) return 0.0;
  return smooth_step_down((r - 0.5) / 1.5);
}

double plateau(double s) { return smooth_step_down(s - 1); }
double plateau_derivative(double s) { return smooth_step_down_derivative(s - 1); }

double cutoff_l1_norm(std::size_t n) {
  static std::map<std::size_t, double> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  static const GridSpec boxes[4] = {{1, 2048, 256.0}, {2, 512, 64.0}, {3, 128, 24.0}, {4, 32, 8.0}};
  if (n < 1 || n > 4) fail(ErrorCode::Domain, "cutoff norm needs 1 <= n <= 4");
  const GridSpec g = boxes[n - 1];
  const double scale = 1.0 / std::pow(g.spacing(), static_cast<double>(n));
  std::vector<std::complex<double>> spec(g.size());
  double xi[4];
  for (std::size_t i = 0; i < g.size(); ++i) {
    g.frequency(i, xi);
    spec[i] = cutoff_profile(norm_of(xi, n)) * scale;
  }
  Fft fft(g);
  std::vector<double> psi = fft.inverse(spec);
  for (auto& v : psi) v = std::abs(v);
  const double out = pairwise_sum(psi.data(), psi.size()) * g.cell_volume();
  cache[n] = out;
  return out;
}

BlowupDirection::BlowupDirection(const SymbolOperator& a, const QVector& e) : n_(a.n()), dim_v_(a.dim_v()) {
  if (e.size() != a.dim_e()) fail(ErrorCode::Shape, "e must have dimE entries");
  const PolyMatrix p = a.to_polymatrix();
  const PolyMatrix g = p.transpose() * p;
  numer_ = CompiledPolyMatrix(poly_adjugate(g) * p.transpose().apply(e));
  PolyMatrix d(1, 1, a.n());
  d(0, 0) = poly_det(g);
  det_ = CompiledPolyMatrix(d);
}

void BlowupDirection::evaluate(const double* xi, double* out) const {
  double d = 0;
  det_.evaluate(xi, &d);
  numer_.evaluate(xi, out);
  for (std::size_t c = 0; c < dim_v_; ++c) out[c] /= d;
}

std::vector<double> BlowupDirection::at(const std::vector<double>& xi) const {
  if (xi.size() != n_) fail(ErrorCode::Shape, "frequency has the wrong dimension");
  std::vector<double> out(dim_v_);
  evaluate(xi.data(), out.data());
  return out;
}

void check_blowup_operator(const SymbolOperator& a, const QVector& e) {
  if (e.size() != a.dim_e()) fail(ErrorCode::Shape, "e must have dimE entries");
  bool zero = true;
  for (const auto& x : e) zero = zero && sgn(x) == 0;
  if (zero) fail(ErrorCode::Domain, "e must be nonzero");
  if (check_ellipticity(a).status != EllipticStatus::Elliptic)
    fail(ErrorCode::Domain, "blow-up needs a certified elliptic operator");
  const CancelingVerdict v = check_canceling(a, true);
  if (v.status != CancelStatus::NotCanceling || !v.intersection.contains(e))
    fail(ErrorCode::Domain, "e is not in the intersection of the images of A");
}

BlowupField build_blowup_field(const SymbolOperator& a, const QVector& e, double lambda, const GridSpec& g,
                               bool operator_checked) {
  g.validate();
  if (g.n != a.n()) fail(ErrorCode::Shape, "grid dimension does not match the operator");
  if (!(lambda > 2)) fail(ErrorCode::Domain, "lambda must exceed 2");
  if (g.nyquist() < 2 * lambda)
    fail(ErrorCode::Domain, "resolution insufficient: Nyquist " + std::to_string(g.nyquist()) + " < 2 lambda");
  if (!operator_checked) check_blowup_operator(a, e);

  const BlowupDirection dir(a, e);
  const std::size_t dv = a.dim_v(), size = g.size();
  const std::complex<double> unit[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};  // i^{-k}
  const std::complex<double> factor = unit[a.order() % 4] * std::pow(kTwoPi, -static_cast<double>(a.order())) /
                                      std::pow(g.spacing(), static_cast<double>(g.n));
  BlowupField out;
  out.lambda = lambda;
  out.u_hat.assign(dv, std::vector<std::complex<double>>(size));
  std::vector<double> u(dv);
  double xi[4];
  for (std::size_t i = 1; i < size; ++i) {
    g.frequency(i, xi);
    const double r = norm_of(xi, g.n);
    const double w = cutoff_profile(r / lambda) - cutoff_profile(lambda * r);
    if (w == 0) continue;
    dir.evaluate(xi, u.data());
    for (std::size_t c = 0; c < dv; ++c) out.u_hat[c][i] = factor * w * u[c];
  }
  Fft fft(g);
  double im = 0;
  out.u = fft.inverse(out.u_hat, &im);
  out.imag_residual = im;
  out.au = fft.inverse(apply_symbol(a, out.u_hat, g), &im);
  out.imag_residual = std::max(out.imag_residual, im);
  return out;
}

std::vector<double> ExperimentTable::column(const std::string& c) const {
  std::size_t j = 0;
  while (j < columns.size() && columns[j] != c) ++j;
  if (j == columns.size()) fail(ErrorCode::Validation, "no column " + c);
  std::vector<double> out;
  for (const auto& r : rows) out.push_back(r[j]);
  return out;
}

std::string ExperimentTable::csv() const {
  std::ostringstream os;
  os << std::setprecision(10);
  for (std::size_t j = 0; j < columns.size(); ++j) os << (j ? "," : "") << columns[j];
  os << '\n';
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << r[j];
    os << '\n';
  }
  return os.str();
}

ExperimentTable family_ratio_experiment(const SymbolOperator& a, const QVector& e, const SymbolOperator& b,
                                        unsigned l, const std::vector<double>& lambdas, const GridSpec& g,
                                        bool refine) {
  if (b.n() != a.n() || b.dim_v() != a.dim_v()) fail(ErrorCode::Shape, "B must act on the same fields as A");
  const double p = exponent_for(a.n(), b.order(), l);
  check_blowup_operator(a, e);
  const double bound = 2 * cutoff_l1_norm(a.n()) * (1 + kBlowupBoundSlack);

  auto measure = [&](double lambda, const GridSpec& grid, double* au_l1) {
    BlowupField f = build_blowup_field(a, e, lambda, grid, true);
    const double num = lp_norm(derivative_magnitude(f.u_hat, grid, l), grid, p);
    *au_l1 = lp_norm(f.au, 1.0);
    const double den = b == a ? *au_l1 : l1_of(apply_symbol(b, f.u_hat, grid), grid);
    return std::array<double, 2>{num, den};
  };

  ExperimentTable t;
  t.columns = {"lambda", "numerator", "denominator", "ratio", "au_l1", "bound_ok"};
  if (refine) t.columns.insert(t.columns.end(), {"ratio_refined", "rel_change", "converged"});
  for (double lambda : lambdas) {
    double au = 0;
    const auto [num, den] = measure(lambda, g, &au);
    std::vector<double> row = {lambda, num, den, num / den, au, au <= bound ? 1.0 : 0.0};
    if (refine) {
      double au2 = 0;
      const auto [num2, den2] = measure(lambda, g.refined(), &au2);
      const double change = relative_change(num / den, num2 / den2);
      const bool ok = change < kResolutionTolerance;
      t.converged = t.converged && ok;
      row.insert(row.end(), {num2 / den2, change, ok ? 1.0 : 0.0});
    }
    t.rows.push_back(std::move(row));
  }
  std::ostringstream note;
  note << "p=" << p << " psi_l1=" << cutoff_l1_norm(a.n()) << " grid N=" << g.points << " T=" << g.side;
  t.notes.push_back(note.str());
  return t;
}

ExperimentTable blowup_ratio_experiment(const SymbolOperator& a, const QVector& e, unsigned l,
                                        const std::vector<double>& lambdas, const GridSpec& g, bool refine) {
  const unsigned k = a.order();
  if (k == 1 ? l != 0 : (l < 1 || l >= k)) fail(ErrorCode::Domain, "l must lie in [1, k-1], or be 0 when k = 1");
  ExperimentTable t = family_ratio_experiment(a, e, a, l, lambdas, g, refine);
  t.name = "blowup";
  return t;
}

InequalityValue inequality_ratio(const GridField& u, unsigned l, const std::vector<SymbolOperator>& ops) {
  if (ops.empty()) fail(ErrorCode::Validation, "need at least one operator");
  const unsigned k = ops.front().order();
  for (const auto& b : ops) {
    if (b.order() != k) fail(ErrorCode::Validation, "operators must share one order");
    if (b.n() != u.grid.n || b.dim_v() != u.components) fail(ErrorCode::Shape, "operator does not match the field");
  }
  const double p = exponent_for(u.grid.n, k, l);
  Fft fft(u.grid);
  const Spectrum s = fft.forward(u);
  InequalityValue v;
  v.lhs = lp_norm(derivative_magnitude(s, u.grid, l), u.grid, p);
  for (const auto& b : ops) v.rhs += l1_of(apply_symbol(b, s, u.grid), u.grid);
  v.ratio = v.lhs / v.rhs;
  v.tail = boundary_tail(u);
  return v;
}

ExperimentTable resolution_experiment(const std::string& name, const FieldBuilder& field,
                                      const std::vector<GridSpec>& grids, unsigned l,
                                      const std::vector<SymbolOperator>& ops) {
  ExperimentTable t;
  t.name = name;
  t.columns = {"N", "lhs", "rhs", "ratio", "rel_change", "tail"};
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (const auto& g : grids) {
    const InequalityValue v = inequality_ratio(field(g), l, ops);
    const double change = std::isnan(prev) ? 0.0 : relative_change(prev, v.ratio);
    t.converged = t.converged && change < kResolutionTolerance;
    t.rows.push_back({static_cast<double>(g.points), v.lhs, v.rhs, v.ratio, change, v.tail});
    prev = v.ratio;
  }
  note_tail(t);
  return t;
}

ExperimentTable family_experiment(const std::string& name, const FamilyBuilder& field,
                                  const std::vector<double>& params, const GridSpec& g, unsigned l,
                                  const std::vector<SymbolOperator>& ops) {
  ExperimentTable t;
  t.name = name;
  t.columns = {"parameter", "lhs", "rhs", "ratio", "tail"};
  for (double s : params) {
    const InequalityValue v = inequality_ratio(field(s, g), l, ops);
    t.rows.push_back({s, v.lhs, v.rhs, v.ratio, v.tail});
  }
  note_tail(t);
  return t;
}

ExperimentTable necessity_experiment(const GridField& f, const std::vector<double>& lambdas,
                                     const SymbolOperator* constraint) {
  const GridSpec& g = f.grid;
  g.validate();
  const std::size_t n = g.n, size = g.size();
  const double dv = g.cell_volume();
  if (boundary_tail(f) > kTailTolerance) fail(ErrorCode::Domain, "tail violation: field is not negligible on the boundary");
  const double f_l1 = lp_norm(f, 1.0);

  auto test_function = [&](double lambda, std::vector<double>& phi, std::vector<double>& grad) {
    if (!(lambda > 0)) fail(ErrorCode::Domain, "lambda must be positive");
    if (std::pow(2.0, 1.0 / lambda) >= g.side / 2) fail(ErrorCode::Domain, "test function support exceeds the box");
    phi.assign(size, 0.0);
    grad.assign(size, 0.0);
    double x[4];
    for (std::size_t i = 0; i < size; ++i) {
      g.coordinate(i, x);
      const double r = norm_of(x, n);
      if (r == 0) {
        phi[i] = 1;
        continue;
      }
      const double s = std::pow(r, lambda);
      phi[i] = plateau(s);
      grad[i] = std::abs(plateau_derivative(s)) * lambda * s / r;
    }
  };

  std::vector<double> phi, grad;
  test_function(1.0, phi, grad);
  const double reference = lp_norm(grad, g, static_cast<double>(n));

  ExperimentTable t;
  t.name = "necessity";
  t.columns = {"lambda", "pairing", "f_l1", "dphi_ln", "ratio", "dphi_scale", "expected_scale"};
  double constraint_l1 = std::numeric_limits<double>::quiet_NaN();
  if (constraint) {
    t.columns.push_back("constraint_l1");
    constraint_l1 = lp_norm(apply_symbol(*constraint, f), 1.0);
  }
  std::vector<double> prod(size);
  for (double lambda : lambdas) {
    test_function(lambda, phi, grad);
    double pairing = 0;
    for (std::size_t c = 0; c < f.components; ++c) {
      const double* fc = f.component(c);
      for (std::size_t i = 0; i < size; ++i) prod[i] = fc[i] * phi[i];
      pairing = std::max(pairing, std::abs(pairwise_sum(prod.data(), size) * dv));
    }
    const double dphi = lp_norm(grad, g, static_cast<double>(n));
    std::vector<double> row = {lambda,
                               pairing,
                               f_l1,
                               dphi,
                               pairing / (f_l1 * dphi),
                               dphi / reference,
                               std::pow(lambda, 1.0 - 1.0 / static_cast<double>(n))};
    if (constraint) row.push_back(constraint_l1);
    t.rows.push_back(std::move(row));
  }
  return t;
}

double boundary_tail(const GridField& u) {
  const GridSpec& g = u.grid;
  const std::vector<double> m = magnitude(u);
  double edge = 0, top = 0;
  std::size_t idx[4];
  for (std::size_t i = 0; i < m.size(); ++i) {
    top = std::max(top, m[i]);
    g.unravel(i, idx);
    bool face = false;
    for (std::size_t a = 0; a < g.n; ++a) face = face || idx[a] == g.points / 2;
    if (face) edge = std::max(edge, m[i]);
  }
  return top > 0 ? edge / top : 0.0;
}

namespace fields {

namespace {

template <typename F>
GridField tabulate(const GridSpec& g, std::size_t comps, F&& f) {
  g.validate();
  GridField out(g, comps);
  double x[4];
  std::vector<double> v(comps);
  for (std::size_t i = 0; i < g.size(); ++i) {
    g.coordinate(i, x);
    f(x, v.data());
    for (std::size_t c = 0; c < comps; ++c) out.component(c)[i] = v[c];
  }
  return out;
}

double gauss(const double* x, const std::vector<double>& centre, double sigma) {
  double r2 = 0;
  for (std::size_t a = 0; a < centre.size(); ++a) r2 += (x[a] - centre[a]) * (x[a] - centre[a]);
  return std::exp(-r2 / (2 * sigma * sigma));
}

std::vector<double> centre_or_origin(const GridSpec& g, const std::vector<double>& c) {
  if (c.empty()) return std::vector<double>(g.n, 0.0);
  if (c.size() != g.n) fail(ErrorCode::Shape, "centre has the wrong dimension");
  return c;
}

}  // namespace

GridField gaussian(const GridSpec& g, double sigma, const std::vector<double>& centre, bool normalized) {
  const auto c = centre_or_origin(g, centre);
  const double scale = normalized ? std::pow(kTwoPi * sigma * sigma, -0.5 * static_cast<double>(g.n)) : 1.0;
  return tabulate(g, 1, [&](const double* x, double* v) { v[0] = scale * gauss(x, c, sigma); });
}

GridField gaussian_derivative(const GridSpec& g, double sigma, const std::vector<double>& centre) {
  const auto c = centre_or_origin(g, centre);
  return tabulate(g, 1, [&](const double* x, double* v) { v[0] = -(x[0] - c[0]) / (sigma * sigma) * gauss(x, c, sigma); });
}

GridField vector_gaussian(const GridSpec& g, std::size_t components, double sigma) {
  std::vector<std::vector<double>> centres(components, std::vector<double>(g.n));
  for (std::size_t c = 0; c < components; ++c)
    for (std::size_t a = 0; a < g.n; ++a) centres[c][a] = 0.25 * static_cast<double>(c + 1) * (a % 2 ? -1.0 : 1.0);
  return tabulate(g, components, [&](const double* x, double* v) {
    for (std::size_t c = 0; c < components; ++c)
      v[c] = (1.0 + 0.5 * static_cast<double>(c)) * gauss(x, centres[c], sigma * (1.0 + 0.25 * static_cast<double>(c)));
  });
}

GridField curl_potential(const GridSpec& g, double sigma, const std::vector<double>& centre) {
  if (g.n != 2) fail(ErrorCode::Domain, "curl potential is planar");
  const auto c = centre_or_origin(g, centre);
  return tabulate(g, 2, [&](const double* x, double* v) {
    const double w = gauss(x, c, sigma) / (sigma * sigma);
    v[0] = -(x[1] - c[1]) * w;
    v[1] = (x[0] - c[0]) * w;
  });
}

GridField mollified_disc(const GridSpec& g, double r, double eps) {
  if (!(eps > 0) || !(r > eps)) fail(ErrorCode::Domain, "need 0 < eps < r");
  return tabulate(g, 1, [&](const double* x, double* v) {
    const double t = (r - norm_of(x, g.n)) / eps;
    v[0] = smooth_step_down((1 - t) / 2);
  });
}

GridField newton_gradient(const GridSpec& g, double eps) {
  const GridField rho = gaussian(g, eps, {}, true);
  Fft fft(g);
  const Spectrum s = fft.forward(rho);
  const Spectrum u = apply_multiplier(s, g, g.n, [&](const double* xi, const std::complex<double>* in,
                                                     std::complex<double>* out) {
    double r2 = 0;
    for (std::size_t a = 0; a < g.n; ++a) r2 += xi[a] * xi[a];
    for (std::size_t a = 0; a < g.n; ++a)
      out[a] = r2 == 0 ? std::complex<double>(0) : std::complex<double>(0, -xi[a] / (kTwoPi * r2)) * in[0];
  });
  return fft.inverse(u);
}

}  // namespace fields

}  // namespace symcan
