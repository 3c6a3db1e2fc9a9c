#include "freqcnn/pooling.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "freqcnn/errors.hpp"

namespace freqcnn {

namespace {

// sin(pi t) with the argument reduced to [-1/2, 1/2] first, so integers map to
// an exact zero and the result is odd in t bit-for-bit.
double sin_pi(double t) {
  double r = std::remainder(t, 2.0);  // [-1, 1]
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(std::numbers::pi * r);
}

// Input-bin indices that feed output bin `a` of an m-point axis taken from an
// n-point axis.
std::vector<std::size_t> source_bins(std::size_t a, std::size_t m, std::size_t n) {
  auto index_of = [n](long freq) {
    return freq >= 0 ? static_cast<std::size_t>(freq)
                     : static_cast<std::size_t>(static_cast<long>(n) + freq);
  };
  if (m % 2 == 0 && a == m / 2) {
    const long half = static_cast<long>(m / 2);
    const std::size_t pos = index_of(half);
    const std::size_t neg = index_of(-half);
    if (pos == neg) return {pos};
    return {pos, neg};
  }
  return {index_of(signed_frequency(a, m))};
}

}  // namespace

double sinc(double t) {
  if (t == 0.0) return 1.0;
  return sin_pi(t) / (std::numbers::pi * t);
}

BoxKernel::BoxKernel(double width, double height) : width_(width), height_(height) {
  if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(width) || !std::isfinite(height)) {
    throw DomainError("BoxKernel widths must be finite and strictly positive");
  }
}

double BoxKernel::operator()(double x, double y) const {
  if (std::abs(x) > width_ / 2.0 || std::abs(y) > height_ / 2.0) return 0.0;
  return amplitude();
}

double box_ft(const BoxKernel& kernel, double u, double v) {
  require_finite(u, "u");
  require_finite(v, "v");
  return sinc(kernel.width() * u) * sinc(kernel.height() * v);
}

RealSignal2D avg_pool_direct(const RealSignal2D& signal, PoolWindow window) {
  if (window.rows == 0 || window.cols == 0 || signal.rows() % window.rows != 0 ||
      signal.cols() % window.cols != 0) {
    throw LengthError("avg_pool_direct: " + std::to_string(signal.rows()) + "x" +
                      std::to_string(signal.cols()) + " is not divisible by window " +
                      std::to_string(window.rows) + "x" + std::to_string(window.cols));
  }
  const std::size_t oh = signal.rows() / window.rows;
  const std::size_t ow = signal.cols() / window.cols;
  const double count = static_cast<double>(window.rows * window.cols);
  std::vector<double> out(oh * ow);
  for (std::size_t r = 0; r < oh; ++r) {
    for (std::size_t c = 0; c < ow; ++c) {
      double acc = 0.0;
      for (std::size_t wr = 0; wr < window.rows; ++wr) {
        for (std::size_t wc = 0; wc < window.cols; ++wc) {
          acc += signal.at(r * window.rows + wr, c * window.cols + wc);
        }
      }
      out[r * ow + c] = acc / count;
    }
  }
  return RealSignal2D(oh, ow, std::move(out), signal.dy() * static_cast<double>(window.rows),
                      signal.dx() * static_cast<double>(window.cols));
}

ComplexSpectrum2D spectral_pool_truncate(const ComplexSpectrum2D& spectrum,
                                         TruncationSpec spec) {
  const std::size_t h = spectrum.rows();
  const std::size_t w = spectrum.cols();
  if (spec.out_rows == 0 || spec.out_cols == 0 || spec.out_rows > h || spec.out_cols > w) {
    throw LengthError("spectral_pool_truncate: output " + std::to_string(spec.out_rows) + "x" +
                      std::to_string(spec.out_cols) + " must be non-empty and fit in " +
                      std::to_string(h) + "x" + std::to_string(w));
  }
  const double scale =
      static_cast<double>(spec.out_rows * spec.out_cols) / static_cast<double>(h * w);
  std::vector<Complex> out(spec.out_rows * spec.out_cols);
  for (std::size_t a = 0; a < spec.out_rows; ++a) {
    const auto rows = source_bins(a, spec.out_rows, h);
    for (std::size_t b = 0; b < spec.out_cols; ++b) {
      const auto cols = source_bins(b, spec.out_cols, w);
      Complex acc{0.0, 0.0};
      for (std::size_t r : rows) {
        for (std::size_t c : cols) acc += spectrum.at(r, c);
      }
      out[a * spec.out_cols + b] = acc * (scale / static_cast<double>(rows.size() * cols.size()));
    }
  }
  return ComplexSpectrum2D(spec.out_rows, spec.out_cols, std::move(out));
}

double gap_spatial(const RealSignal2D& signal) {
  double acc = 0.0;
  for (double v : signal.data()) acc += v;
  return acc / static_cast<double>(signal.data().size());
}

double gap_spectral(const ComplexSpectrum2D& spectrum) {
  const Complex dc = spectrum.at(0, 0);
  if (std::abs(dc.imag()) > 1e-10 * std::max(1.0, std::abs(dc))) {
    throw DomainError("gap_spectral: DC coefficient has imaginary part " +
                      std::to_string(dc.imag()) + "; spectrum is not of a real signal");
  }
  return dc.real() / static_cast<double>(spectrum.rows() * spectrum.cols());
}

}  // namespace freqcnn
