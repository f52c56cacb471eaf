#pragma once

#include <vector>

#include "numlab/grid.hpp"

namespace symcan {

// Pairwise (cascade) summation; fixed order for reproducible totals.
double pairwise_sum(const double* v, std::size_t count);

// Pointwise Euclidean length across components.
std::vector<double> magnitude(const GridField& u);

double lp_norm(const GridField& u, double p);
double lp_norm(const std::vector<double>& magnitudes, const GridSpec& g, double p);

// (int_0^inf (t^{1/p} u*(t))^q dt / t)^{1/q} with u* the decreasing
// rearrangement of |u|; q = infinity gives sup_t t^{1/p} u*(t).
double lorentz_norm(const GridField& u, double p, double q);

// (sum_{x != y} |u(x) - u(y)|^p / |x - y|^{n + s p} h^{2n})^{1/p} with the
// periodic distance. Limited to n <= 2 and N <= 64.
double gagliardo_seminorm(const GridField& u, double s, double p);

}  // namespace symcan
