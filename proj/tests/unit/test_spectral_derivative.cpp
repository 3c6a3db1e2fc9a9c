#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "freqcnn/dft.hpp"
#include "freqcnn/errors.hpp"
#include "freqcnn/spectral_derivative.hpp"
#include "test_support.hpp"

using namespace freqcnn;
using freqcnn::testing::Uniform;

namespace {

constexpr double kPi = std::numbers::pi;

// Periodic signal with random coefficients on harmonics 1..max_harmonic.
struct BandLimited {
  std::vector<double> a, b;
  double length;
  double value(double x) const {
    double v = 0.0;
    for (std::size_t h = 0; h < a.size(); ++h) {
      const double w = 2.0 * kPi * static_cast<double>(h + 1) / length;
      v += a[h] * std::cos(w * x) + b[h] * std::sin(w * x);
    }
    return v;
  }
};

// Fourth-order central difference f'(x) ~ (-f(x+2h) + 8f(x+h) - 8f(x-h) + f(x-2h)) / 12h.
template <typename F>
double fd4(const F& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

}  // namespace

TEST(SpectralDerivative1d, SinToCos) {
  const std::size_t n = 64;
  const double dx = 2.0 * kPi / n;
  std::vector<double> s(n);
  for (std::size_t k = 0; k < n; ++k) s[k] = std::sin(dx * static_cast<double>(k));
  const RealSignal1D sig(s, dx);
  const auto d = ifft_1d(spectral_derivative_1d(fft_1d(sig), sig.domain_length()));
  for (std::size_t k = 0; k < n; ++k) {
    EXPECT_NEAR(d[k], std::cos(dx * static_cast<double>(k)), 1e-10);
  }
}

TEST(SpectralDerivative1d, ConstantGivesZero) {
  const auto d = spectral_derivative_1d(fft_1d(RealSignal1D(std::vector<double>(16, 3.0))), 5.0);
  for (const auto& c : d.coeffs()) EXPECT_EQ(std::abs(c), 0.0);
}

TEST(SpectralDerivative1d, NyquistBinZeroed) {
  const auto d = spectral_derivative_1d(ComplexSpectrum1D({1, 1, 1, 1}), 1.0);
  EXPECT_EQ(d[2], Complex(0.0, 0.0));
  EXPECT_NEAR(d[1].imag(), 2.0 * kPi, 1e-15);
  EXPECT_NEAR(d[3].imag(), -2.0 * kPi, 1e-15);
}

TEST(SpectralDerivative1d, BandLimitedMatchesFiniteDifferences) {
  Uniform rng(21);
  const std::size_t n = 64;
  const double length = 3.0;
  const BandLimited f{rng.vec(n / 4 - 1), rng.vec(n / 4 - 1), length};
  const double dx = length / n;
  std::vector<double> s(n);
  for (std::size_t k = 0; k < n; ++k) s[k] = f.value(dx * static_cast<double>(k));
  const auto d = ifft_1d(spectral_derivative_1d(fft_1d(RealSignal1D(s, dx)), length));
  auto fn = [&](double x) { return f.value(x); };
  for (std::size_t k = 0; k < n; ++k) {
    EXPECT_NEAR(d[k], fd4(fn, dx * static_cast<double>(k), 1e-4), 1e-6);
  }
}

TEST(SpectralDerivative1d, RejectsBadLength) {
  EXPECT_THROW(spectral_derivative_1d(ComplexSpectrum1D({1, 1}), 0.0), DomainError);
}

TEST(SpectralDerivative2d, SinAlongX) {
  const std::size_t n = 32;
  const double d = 1.0 / n;
  std::vector<double> g(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) g[r * n + c] = std::sin(2.0 * kPi * d * static_cast<double>(c));
  }
  const auto out =
      idft_2d(spectral_derivative_2d(dft_2d(RealSignal2D(n, n, g, d, d)), Axis::X, {1.0, 1.0}));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      EXPECT_NEAR(out.at(r, c), 2.0 * kPi * std::cos(2.0 * kPi * d * static_cast<double>(c)), 1e-9);
    }
  }
  const auto dy =
      idft_2d(spectral_derivative_2d(dft_2d(RealSignal2D(n, n, g, d, d)), Axis::Y, {1.0, 1.0}));
  for (double v : dy.data()) EXPECT_NEAR(v, 0.0, 1e-12);
}

TEST(SpectralDerivative2d, BandLimitedMatchesFiniteDifferences) {
  Uniform rng(22);
  const std::size_t n = 16;
  const double lx = 2.0, ly = 1.5;
  // f(x, y) = sum over harmonics (hx, hy) in {-3..3}^2 of a cos(.) + b sin(.)
  std::vector<std::array<double, 4>> terms;
  for (int hy = -3; hy <= 3; ++hy) {
    for (int hx = 0; hx <= 3; ++hx) terms.push_back({double(hx), double(hy), rng(), rng()});
  }
  auto f = [&](double x, double y) {
    double v = 0.0;
    for (const auto& t : terms) {
      const double phase = 2.0 * kPi * (t[0] * x / lx + t[1] * y / ly);
      v += t[2] * std::cos(phase) + t[3] * std::sin(phase);
    }
    return v;
  };
  const double dx = lx / n, dy = ly / n;
  std::vector<double> g(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) g[r * n + c] = f(dx * double(c), dy * double(r));
  }
  const auto spec = dft_2d(RealSignal2D(n, n, g, dy, dx));
  const auto gx = idft_2d(spectral_derivative_2d(spec, Axis::X, {ly, lx}));
  const auto gy = idft_2d(spectral_derivative_2d(spec, Axis::Y, {ly, lx}));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double x = dx * double(c), y = dy * double(r);
      EXPECT_NEAR(gx.at(r, c), fd4([&](double t) { return f(t, y); }, x, 1e-4), 1e-5);
      EXPECT_NEAR(gy.at(r, c), fd4([&](double t) { return f(x, t); }, y, 1e-4), 1e-5);
    }
  }
}
