#include "freqcnn/spectral_derivative.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "freqcnn/errors.hpp"

namespace freqcnn {

namespace {

void require_positive_length(double length) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw DomainError("spectral derivative domain length must be finite and positive");
  }
}

// i * 2 pi * j / length for bin j of an n-point axis; zero at Nyquist.
Complex derivative_factor(std::size_t j, std::size_t n, double length) {
  if (n % 2 == 0 && j == n / 2) return {0.0, 0.0};
  const double freq = static_cast<double>(signed_frequency(j, n)) / length;
  return {0.0, 2.0 * std::numbers::pi * freq};
}

}  // namespace

ComplexSpectrum1D spectral_derivative_1d(const ComplexSpectrum1D& spectrum,
                                         double domain_length) {
  require_positive_length(domain_length);
  const std::size_t n = spectrum.size();
  std::vector<Complex> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = derivative_factor(j, n, domain_length) * spectrum[j];
  }
  return ComplexSpectrum1D(std::move(out));
}

ComplexSpectrum2D spectral_derivative_2d(const ComplexSpectrum2D& spectrum, Axis axis,
                                         DomainLengths lengths) {
  require_positive_length(lengths.x);
  require_positive_length(lengths.y);
  const std::size_t h = spectrum.rows();
  const std::size_t w = spectrum.cols();
  std::vector<Complex> out(h * w);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const Complex factor = axis == Axis::X ? derivative_factor(c, w, lengths.x)
                                             : derivative_factor(r, h, lengths.y);
      out[r * w + c] = factor * spectrum.at(r, c);
    }
  }
  return ComplexSpectrum2D(h, w, std::move(out));
}

}  // namespace freqcnn
