#include "freqcnn/dft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "freqcnn/errors.hpp"
#include "complex_mul.hpp"

namespace freqcnn {

namespace {

void require_power_of_two(std::size_t n, const char* what) {
  if (!is_power_of_two(n)) {
    throw LengthError(std::string(what) + " length " + std::to_string(n) +
                      " is not a power of two; zero-pad the input first");
  }
}

// exp(sign * 2 pi i * num / den), reducing num mod den first so the angle
// stays in [0, 2 pi) and twiddles are accurate for large n.
Complex unit_root(std::size_t num, std::size_t den, double sign) {
  const double angle =
      sign * 2.0 * std::numbers::pi * static_cast<double>(num % den) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

double max_abs(std::span<const Complex> v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

// Rejects complex output that should have been real.
std::vector<double> take_real(std::span<const Complex> values, double coeff_scale,
                              const char* what) {
  double residue = 0.0;
  for (const auto& v : values) residue = std::max(residue, std::abs(v.imag()));
  if (residue > kImaginaryResidueTol * coeff_scale && residue > 0.0) {
    throw NonRealSpectrumError(std::string(what) + ": imaginary residue " +
                                   std::to_string(residue) +
                                   " exceeds tolerance; spectrum is not of a real signal",
                               residue);
  }
  std::vector<double> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(),
                 [](const Complex& c) { return c.real(); });
  return out;
}

// Applies the 1D FFT to every row, then every column, of a row-major grid.
void fft_2d_inplace(std::vector<Complex>& grid, std::size_t rows, std::size_t cols,
                    Direction dir) {
  for (std::size_t r = 0; r < rows; ++r) {
    fft_inplace(std::span<Complex>(grid.data() + r * cols, cols), dir);
  }
  std::vector<Complex> column(rows);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) column[r] = grid[r * cols + c];
    fft_inplace(column, dir);
    for (std::size_t r = 0; r < rows; ++r) grid[r * cols + c] = column[r];
  }
}

}  // namespace

ComplexSpectrum1D dft_naive_1d(const RealSignal1D& signal) {
  const std::size_t n = signal.size();
  std::vector<Complex> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) acc += signal[k] * unit_root(j * k, n, -1.0);
    out[j] = acc;
  }
  return ComplexSpectrum1D(std::move(out));
}

std::vector<Complex> idft_naive_1d(std::span<const Complex> coeffs) {
  const std::size_t n = coeffs.size();
  if (n == 0) throw LengthError("idft_naive_1d: empty spectrum");
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) acc += coeffs[j] * unit_root(j * k, n, 1.0);
    out[k] = acc / static_cast<double>(n);
  }
  return out;
}

void fft_inplace(std::span<Complex> data, Direction dir) {
  const std::size_t n = data.size();
  require_power_of_two(n, "fft");
  if (n == 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  const double sign = dir == Direction::Forward ? -1.0 : 1.0;
  std::vector<Complex> roots(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) roots[k] = unit_root(k, n, sign);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t k = 0; k < half; ++k) {
      const Complex w = roots[k * stride];
      for (std::size_t start = 0; start < n; start += len) {
        const Complex even = data[start + k];
        const Complex odd = detail::cmul(data[start + k + half], w);
        data[start + k] = even + odd;
        data[start + k + half] = even - odd;
      }
    }
  }

  if (dir == Direction::Inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& v : data) v *= inv_n;
  }
}

ComplexSpectrum1D fft_1d(const RealSignal1D& signal) {
  require_power_of_two(signal.size(), "fft_1d");
  std::vector<Complex> data(signal.samples().begin(), signal.samples().end());
  fft_inplace(data, Direction::Forward);
  return ComplexSpectrum1D(std::move(data));
}

RealSignal1D ifft_1d(const ComplexSpectrum1D& spectrum, double spacing, double origin) {
  require_power_of_two(spectrum.size(), "ifft_1d");
  std::vector<Complex> data(spectrum.coeffs().begin(), spectrum.coeffs().end());
  fft_inplace(data, Direction::Inverse);
  return RealSignal1D(take_real(data, max_abs(spectrum.coeffs()), "ifft_1d"), spacing, origin);
}

ComplexSpectrum2D dft_2d(const RealSignal2D& signal) {
  require_power_of_two(signal.rows(), "dft_2d rows");
  require_power_of_two(signal.cols(), "dft_2d cols");
  std::vector<Complex> grid(signal.data().begin(), signal.data().end());
  fft_2d_inplace(grid, signal.rows(), signal.cols(), Direction::Forward);
  return ComplexSpectrum2D(signal.rows(), signal.cols(), std::move(grid));
}

RealSignal2D idft_2d(const ComplexSpectrum2D& spectrum, double dy, double dx) {
  require_power_of_two(spectrum.rows(), "idft_2d rows");
  require_power_of_two(spectrum.cols(), "idft_2d cols");
  std::vector<Complex> grid(spectrum.data().begin(), spectrum.data().end());
  fft_2d_inplace(grid, spectrum.rows(), spectrum.cols(), Direction::Inverse);
  return RealSignal2D(spectrum.rows(), spectrum.cols(),
                      take_real(grid, max_abs(spectrum.data()), "idft_2d"), dy, dx);
}

ComplexSpectrum2D dft_naive_2d(const RealSignal2D& signal) {
  const std::size_t h = signal.rows();
  const std::size_t w = signal.cols();
  std::vector<Complex> out(h * w);
  for (std::size_t u = 0; u < h; ++u) {
    for (std::size_t v = 0; v < w; ++v) {
      Complex acc{0.0, 0.0};
      for (std::size_t y = 0; y < h; ++y) {
        const Complex row_phase = unit_root(u * y, h, -1.0);
        for (std::size_t x = 0; x < w; ++x) {
          acc += signal.at(y, x) * row_phase * unit_root(v * x, w, -1.0);
        }
      }
      out[u * w + v] = acc;
    }
  }
  return ComplexSpectrum2D(h, w, std::move(out));
}

RealSignal2D idft_naive_2d(const ComplexSpectrum2D& spectrum, double dy, double dx) {
  const std::size_t h = spectrum.rows();
  const std::size_t w = spectrum.cols();
  std::vector<Complex> out(h * w);
  const double inv = 1.0 / static_cast<double>(h * w);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      Complex acc{0.0, 0.0};
      for (std::size_t u = 0; u < h; ++u) {
        const Complex row_phase = unit_root(u * y, h, 1.0);
        for (std::size_t v = 0; v < w; ++v) {
          acc += spectrum.at(u, v) * row_phase * unit_root(v * x, w, 1.0);
        }
      }
      out[y * w + x] = acc * inv;
    }
  }
  return RealSignal2D(h, w, take_real(out, max_abs(spectrum.data()), "idft_naive_2d"), dy, dx);
}

}  // namespace freqcnn
