#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace symcan {

// Periodic box [-T/2, T/2)^n sampled at N points per axis. Index j on an axis
// sits at the wrapped coordinate (j < N/2 ? j : j - N) * T / N and carries
// the frequency (j < N/2 ? j : j - N) / T.
struct GridSpec {
  std::size_t n = 2;
  std::size_t points = 64;
  double side = 1.0;

  void validate() const;
  std::size_t size() const;
  double spacing() const { return side / static_cast<double>(points); }
  double cell_volume() const;
  // Largest representable frequency magnitude per axis, N / (2T).
  double nyquist() const { return static_cast<double>(points) / (2.0 * side); }
  GridSpec refined() const { return {n, 2 * points, side}; }

  long wrapped(std::size_t j) const {
    return j < points / 2 ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(points);
  }
  // Per-axis indices of flat index i, last axis fastest.
  void unravel(std::size_t i, std::size_t* idx) const;
  void coordinate(std::size_t i, double* x) const;
  void frequency(std::size_t i, double* xi) const;
};

struct GridField {
  GridSpec grid;
  std::size_t components = 1;
  std::vector<double> values;  // component c occupies [c * size, (c + 1) * size)

  GridField() = default;
  GridField(const GridSpec& g, std::size_t comps) : grid(g), components(comps), values(g.size() * comps, 0.0) {}

  double* component(std::size_t c) { return values.data() + c * grid.size(); }
  const double* component(std::size_t c) const { return values.data() + c * grid.size(); }
};

using Spectrum = std::vector<std::vector<std::complex<double>>>;

// Forward and normalized inverse complex DFT over the whole grid.
class Fft {
 public:
  explicit Fft(const GridSpec& g);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  std::vector<std::complex<double>> forward(const double* real);
  // Inverse transform; returns the real part and raises `imag_max`, when
  // given, to the largest imaginary magnitude seen.
  std::vector<double> inverse(const std::vector<std::complex<double>>& spec, double* imag_max = nullptr);

  Spectrum forward(const GridField& f);
  GridField inverse(const Spectrum& s, double* imag_max = nullptr);

 private:
  GridSpec grid_;
  void* buffer_;
  void* forward_plan_;
  void* inverse_plan_;
};

}  // namespace symcan
