#pragma once

#include <functional>
#include <string>
#include <vector>

#include "core/symbol.hpp"
#include "numlab/grid.hpp"
#include "numlab/spectral.hpp"

namespace symcan {

// 1 for t <= 0, 0 for t >= 1, C-infinity in between.
double smooth_step_down(double t);
double smooth_step_down_derivative(double t);

// Radial cutoff psi-hat: 1 on |xi| <= 1/2, 0 on |xi| >= 2.
double cutoff_profile(double r);
// Plateau psi(s): 1 on [0, 1], 0 on [2, inf).
double plateau(double s);
double plateau_derivative(double s);

// ||psi||_{L^1(R^n)} for the inverse transform of cutoff_profile.
double cutoff_l1_norm(std::size_t n);

// U(xi) = adj(G) A^T e / det G, the solution of A(xi) U(xi) = e.
class BlowupDirection {
 public:
  BlowupDirection(const SymbolOperator& a, const QVector& e);
  void evaluate(const double* xi, double* out) const;
  std::vector<double> at(const std::vector<double>& xi) const;

 private:
  CompiledPolyMatrix numer_, det_;
  std::size_t n_, dim_v_;
};

struct BlowupField {
  double lambda = 0;
  Spectrum u_hat;  // DFT coefficients
  GridField u;
  GridField au;
  double imag_residual = 0;
};

// Certified ellipticity and e in the certified common image of A; throws
// Domain otherwise.
void check_blowup_operator(const SymbolOperator& a, const QVector& e);
// Requires lambda > 2 and Nyquist >= 2 lambda; the operator is checked unless
// `operator_checked`.
BlowupField build_blowup_field(const SymbolOperator& a, const QVector& e, double lambda, const GridSpec& g,
                               bool operator_checked = false);

struct ExperimentTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> notes;
  bool converged = true;

  std::vector<double> column(const std::string& c) const;
  std::string csv() const;
};

// Relative change above which a doubled-resolution rerun flags a row.
constexpr double kResolutionTolerance = 0.10;
// Slack on ||A(D) u_lambda||_1 <= 2 ||psi||_1.
constexpr double kBlowupBoundSlack = 0.05;
// Largest boundary-to-peak ratio for a field treated as compactly supported.
constexpr double kTailTolerance = 1e-8;

// R(lambda) = ||D^l u_lambda||_{L^{n/(n-(k_B-l))}} / ||B(D) u_lambda||_{L^1} on
// the blow-up family of (A, e). With B = A this is the blow-up ratio.
ExperimentTable family_ratio_experiment(const SymbolOperator& a, const QVector& e, const SymbolOperator& b,
                                        unsigned l, const std::vector<double>& lambdas, const GridSpec& g,
                                        bool refine = true);
ExperimentTable blowup_ratio_experiment(const SymbolOperator& a, const QVector& e, unsigned l,
                                        const std::vector<double>& lambdas, const GridSpec& g, bool refine = true);

// ||D^l u||_{L^p} / sum_j ||B_j(D) u||_{L^1}, p = n / (n - (k - l)).
struct InequalityValue {
  double lhs = 0, rhs = 0, ratio = 0, tail = 0;
};
InequalityValue inequality_ratio(const GridField& u, unsigned l, const std::vector<SymbolOperator>& ops);

using FieldBuilder = std::function<GridField(const GridSpec&)>;
ExperimentTable resolution_experiment(const std::string& name, const FieldBuilder& field,
                                      const std::vector<GridSpec>& grids, unsigned l,
                                      const std::vector<SymbolOperator>& ops);
using FamilyBuilder = std::function<GridField(double, const GridSpec&)>;
ExperimentTable family_experiment(const std::string& name, const FamilyBuilder& field,
                                  const std::vector<double>& params, const GridSpec& g, unsigned l,
                                  const std::vector<SymbolOperator>& ops);

// sup_j |int f_j phi_lambda| / (||f||_1 ||D phi_lambda||_{L^n}) with
// phi_lambda(x) = psi(|x|^lambda). A constraint L adds ||L(D) f||_1. Throws
// Domain when f is not negligible on the boundary.
ExperimentTable necessity_experiment(const GridField& f, const std::vector<double>& lambdas,
                                     const SymbolOperator* constraint = nullptr);

// Largest |u| on the faces of the box relative to the largest |u| overall.
double boundary_tail(const GridField& u);

namespace fields {
GridField gaussian(const GridSpec& g, double sigma, const std::vector<double>& centre, bool normalized = false);
// d/dx_1 of a Gaussian bump; mean zero.
GridField gaussian_derivative(const GridSpec& g, double sigma, const std::vector<double>& centre);
// Two-component Gaussian field with distinct centres and widths.
GridField vector_gaussian(const GridSpec& g, std::size_t components, double sigma);
// (d_2 g, -d_1 g) for a Gaussian g on a planar grid; divergence free.
GridField curl_potential(const GridSpec& g, double sigma, const std::vector<double>& centre);
// Smoothed indicator of the disc |x| < r with transition width 2 eps.
GridField mollified_disc(const GridSpec& g, double r, double eps);
// grad Delta^{-1} (rho_eps - mean) for the normalized Gaussian rho_eps.
GridField newton_gradient(const GridSpec& g, double eps);
}  // namespace fields

}  // namespace symcan
