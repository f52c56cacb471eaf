#include "numlab/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>

#include "core/error.hpp"

namespace symcan {

void GridSpec::validate() const {
  if (n < 1 || n > 4) fail(ErrorCode::Domain, "grid dimension must be 1..4");
  if (points < 2 || (points & (points - 1)) != 0) fail(ErrorCode::Domain, "points per axis must be a power of two");
  if (!(side > 0) || !std::isfinite(side)) fail(ErrorCode::Domain, "box side must be positive");
  double total = 1;
  for (std::size_t a = 0; a < n; ++a) total *= static_cast<double>(points);
  if (total > 1 << 26) fail(ErrorCode::Budget, "grid has more than 2^26 points");
}

std::size_t GridSpec::size() const {
  std::size_t s = 1;
  for (std::size_t a = 0; a < n; ++a) s *= points;
  return s;
}

double GridSpec::cell_volume() const { return std::pow(spacing(), static_cast<double>(n)); }

void GridSpec::unravel(std::size_t i, std::size_t* idx) const {
  for (std::size_t a = n; a-- > 0;) {
    idx[a] = i % points;
    i /= points;
  }
}

void GridSpec::coordinate(std::size_t i, double* x) const {
  std::size_t idx[4];
  unravel(i, idx);
  for (std::size_t a = 0; a < n; ++a) x[a] = static_cast<double>(wrapped(idx[a])) * spacing();
}

void GridSpec::frequency(std::size_t i, double* xi) const {
  std::size_t idx[4];
  unravel(i, idx);
  for (std::size_t a = 0; a < n; ++a) xi[a] = static_cast<double>(wrapped(idx[a])) / side;
}

Fft::Fft(const GridSpec& g) : grid_(g) {
  grid_.validate();
  const std::size_t size = grid_.size();
  auto* buf = fftw_alloc_complex(size);
  buffer_ = buf;
  std::vector<int> dims(grid_.n, static_cast<int>(grid_.points));
  forward_plan_ = fftw_plan_dft(static_cast<int>(grid_.n), dims.data(), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  inverse_plan_ = fftw_plan_dft(static_cast<int>(grid_.n), dims.data(), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft::~Fft() {
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
  fftw_free(buffer_);
}

std::vector<std::complex<double>> Fft::forward(const double* real) {
  const std::size_t size = grid_.size();
  auto* buf = static_cast<fftw_complex*>(buffer_);
  for (std::size_t i = 0; i < size; ++i) {
    buf[i][0] = real[i];
    buf[i][1] = 0.0;
  }
  fftw_execute(static_cast<fftw_plan>(forward_plan_));
  std::vector<std::complex<double>> out(size);
  std::memcpy(static_cast<void*>(out.data()), buf, size * sizeof(fftw_complex));
  return out;
}

std::vector<double> Fft::inverse(const std::vector<std::complex<double>>& spec, double* imag_max) {
  const std::size_t size = grid_.size();
  if (spec.size() != size) fail(ErrorCode::Shape, "spectrum size does not match the grid");
  auto* buf = static_cast<fftw_complex*>(buffer_);
  std::memcpy(static_cast<void*>(buf), spec.data(), size * sizeof(fftw_complex));
  fftw_execute(static_cast<fftw_plan>(inverse_plan_));
  const double scale = 1.0 / static_cast<double>(size);
  std::vector<double> out(size);
  double im = 0;
  for (std::size_t i = 0; i < size; ++i) {
    out[i] = buf[i][0] * scale;
    im = std::max(im, std::abs(buf[i][1] * scale));
  }
  if (imag_max) *imag_max = std::max(*imag_max, im);
  return out;
}

Spectrum Fft::forward(const GridField& f) {
  Spectrum s;
  for (std::size_t c = 0; c < f.components; ++c) s.push_back(forward(f.component(c)));
  return s;
}

GridField Fft::inverse(const Spectrum& s, double* imag_max) {
  GridField f(grid_, s.size());
  for (std::size_t c = 0; c < s.size(); ++c) {
    std::vector<double> v = inverse(s[c], imag_max);
    std::copy(v.begin(), v.end(), f.component(c));
  }
  return f;
}

}  // namespace symcan
