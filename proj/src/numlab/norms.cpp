#include "numlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "core/error.hpp"

namespace symcan {

double pairwise_sum(const double* v, std::size_t count) {
  if (count <= 16) {
    double s = 0;
    for (std::size_t i = 0; i < count; ++i) s += v[i];
    return s;
  }
  const std::size_t half = count / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, count - half);
}

std::vector<double> magnitude(const GridField& u) {
  const std::size_t size = u.grid.size();
  std::vector<double> m(size, 0.0);
  for (std::size_t c = 0; c < u.components; ++c) {
    const double* x = u.component(c);
    for (std::size_t i = 0; i < size; ++i) m[i] += x[i] * x[i];
  }
  for (auto& x : m) x = std::sqrt(x);
  return m;
}

double lp_norm(const std::vector<double>& mags, const GridSpec& g, double p) {
  if (!(p >= 1)) fail(ErrorCode::Domain, "p must be at least 1");
  if (std::isinf(p)) return mags.empty() ? 0.0 : *std::max_element(mags.begin(), mags.end());
  std::vector<double> pw(mags.size());
  for (std::size_t i = 0; i < mags.size(); ++i) pw[i] = std::pow(mags[i], p);
  return std::pow(g.cell_volume() * pairwise_sum(pw.data(), pw.size()), 1.0 / p);
}

double lp_norm(const GridField& u, double p) { return lp_norm(magnitude(u), u.grid, p); }

double lorentz_norm(const GridField& u, double p, double q) {
  if (!(p >= 1) || std::isinf(p)) fail(ErrorCode::Domain, "Lorentz p must be finite and at least 1");
  if (!(q >= 1)) fail(ErrorCode::Domain, "Lorentz q must be at least 1");
  std::vector<double> a = magnitude(u);
  std::sort(a.begin(), a.end(), std::greater<>());
  const double vol = u.grid.cell_volume();
  if (std::isinf(q)) {
    double best = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
      best = std::max(best, std::pow(static_cast<double>(j + 1) * vol, 1.0 / p) * a[j]);
    return best;
  }
  // u* is constant on [j vol, (j+1) vol): integrate t^{q/p - 1} exactly there
  const double r = q / p;
  std::vector<double> terms(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double t0 = static_cast<double>(j) * vol, t1 = static_cast<double>(j + 1) * vol;
    terms[j] = std::pow(a[j], q) * (std::pow(t1, r) - std::pow(t0, r)) / r;
  }
  return std::pow(pairwise_sum(terms.data(), terms.size()), 1.0 / q);
}

double gagliardo_seminorm(const GridField& u, double s, double p) {
  const GridSpec& g = u.grid;
  if (!(s > 0 && s < 1)) fail(ErrorCode::Domain, "s must lie in (0, 1)");
  if (!(p >= 1) || std::isinf(p)) fail(ErrorCode::Domain, "p must be finite and at least 1");
  if (g.n > 2 || g.points > 64) fail(ErrorCode::Budget, "Gagliardo seminorm is limited to n <= 2 and N <= 64");
  const std::size_t size = g.size();
  const double h = g.spacing();
  const double expo = static_cast<double>(g.n) + s * p;
  std::vector<double> row(size);
  std::vector<double> rows(size);
  std::size_t ix[4], iy[4];
  for (std::size_t i = 0; i < size; ++i) {
    g.unravel(i, ix);
    for (std::size_t j = 0; j < size; ++j) {
      if (i == j) {
        row[j] = 0;
        continue;
      }
      g.unravel(j, iy);
      double d2 = 0;
      for (std::size_t a = 0; a < g.n; ++a) {
        std::size_t k = ix[a] > iy[a] ? ix[a] - iy[a] : iy[a] - ix[a];
        k = std::min(k, g.points - k);
        d2 += static_cast<double>(k * k);
      }
      double diff2 = 0;
      for (std::size_t c = 0; c < u.components; ++c) {
        const double d = u.component(c)[i] - u.component(c)[j];
        diff2 += d * d;
      }
      row[j] = std::pow(diff2, p / 2) / std::pow(std::sqrt(d2) * h, expo);
    }
    rows[i] = pairwise_sum(row.data(), size);
  }
  const double vol = g.cell_volume();
  return std::pow(vol * vol * pairwise_sum(rows.data(), size), 1.0 / p);
}

}  // namespace symcan
