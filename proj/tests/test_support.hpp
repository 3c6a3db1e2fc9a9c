#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace freqcnn::testing {

// Uniform [-1, 1] draws from mt19937_64 using the top 53 bits, so values do not
// depend on the standard library's distribution implementation.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}
  double operator()() { return 2.0 * static_cast<double>(engine_() >> 11) * 0x1p-53 - 1.0; }
  double in(double lo, double hi) { return lo + (hi - lo) * 0.5 * ((*this)() + 1.0); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
  }
  std::vector<double> vec(std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = (*this)();
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

inline double max_abs_diff(std::span<const std::complex<double>> a,
                           std::span<const std::complex<double>> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::abs(want);
}

// Central difference (f(x+h) - f(x-h)) / 2h.
template <typename F>
auto central_diff(F&& f, double x, double h = 1e-5) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace freqcnn::testing
