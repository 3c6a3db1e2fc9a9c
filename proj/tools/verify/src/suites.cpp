#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "freqcnn/activations.hpp"
#include "freqcnn/conv.hpp"
#include "freqcnn/dft.hpp"
#include "freqcnn/hyp2f1.hpp"
#include "freqcnn/laplace.hpp"
#include "freqcnn/loss.hpp"
#include "freqcnn/pooling.hpp"
#include "freqcnn/quadrature.hpp"
#include "freqcnn/spectral_derivative.hpp"
#include "freqcnn/verify/verify.hpp"

namespace freqcnn::verify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

using Clock = std::chrono::steady_clock;

struct Check {
  std::string_view suite;
  std::string_view name;
  std::string_view anchor;
  double tolerance;  // kInf marks an informational row
  std::function<double(UniformSource&)> measure;
};

// Seeds each check from the run seed and its own name, so a check's random
// instances do not depend on which other suites were selected.
std::uint64_t check_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) h = (h ^ c) * 0x100000001b3ULL;
  return seed ^ h;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }
double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

template <typename F>
auto central_diff(F&& f, double x, double h = 1e-5) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = lo + (hi - lo) * double(i) / double(n - 1);
  return v;
}

template <typename A, typename B>
double max_abs_diff(const A& a, const B& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::vector<double> cosine_grid(std::size_t h, std::size_t w, int fy, int fx) {
  std::vector<double> g(h * w);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      g[r * w + c] = std::cos(2.0 * kPi * (fy * double(r) / double(h) + fx * double(c) / double(w)));
    }
  }
  return g;
}

// ---- dft ------------------------------------------------------------------

double fft_vs_naive(UniformSource& rng) {
  double worst = 0.0;
  for (std::size_t n = 2; n <= 1024; n *= 2) {
    const RealSignal1D s(rng.vec(n));
    const auto fast = fft_1d(s), slow = dft_naive_1d(s);
    double scale = 0.0;
    for (const auto& c : slow.coeffs()) scale = std::max(scale, std::abs(c));
    worst = std::max(worst, max_abs_diff(fast.coeffs(), slow.coeffs()) / std::max(scale, 1.0));
  }
  return worst;
}

double fft_round_trip(UniformSource& rng) {
  double worst = 0.0;
  for (std::size_t n = 1; n <= 1024; n *= 2) {
    const RealSignal1D s(rng.vec(n));
    worst = std::max(worst, max_abs_diff(ifft_1d(fft_1d(s)).samples(), s.samples()));
  }
  return worst;
}

double parseval(UniformSource& rng) {
  double worst = 0.0;
  for (std::size_t n = 2; n <= 1024; n *= 2) {
    const RealSignal1D s(rng.vec(n));
    double time = 0.0, freq = 0.0;
    for (double v : s.samples()) time += v * v;
    const auto spectrum = fft_1d(s);
    for (const auto& c : spectrum.coeffs()) freq += std::norm(c);
    worst = std::max(worst, rel(freq / double(n), time));
  }
  return worst;
}

double derivative_sin_1d(UniformSource&) {
  const std::size_t n = 64;
  const double h = 2.0 * kPi / double(n);
  std::vector<double> s(n), want(n);
  for (std::size_t k = 0; k < n; ++k) {
    s[k] = std::sin(double(k) * h);
    want[k] = std::cos(double(k) * h);
  }
  const auto d = ifft_1d(spectral_derivative_1d(fft_1d(RealSignal1D(s, h)), 2.0 * kPi), h);
  return max_abs_diff(d.samples(), want);
}

double derivative_sin_2d(UniformSource&) {
  const std::size_t n = 32;
  const double h = 1.0 / double(n);
  std::vector<double> s(n * n), want(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      s[r * n + c] = std::sin(2.0 * kPi * double(c) * h);
      want[r * n + c] = 2.0 * kPi * std::cos(2.0 * kPi * double(c) * h);
    }
  }
  const auto spec = dft_2d(RealSignal2D(n, n, s, h, h));
  const auto d = idft_2d(spectral_derivative_2d(spec, Axis::X, {1.0, 1.0}), h, h);
  return max_abs_diff(d.data(), want);
}

// ---- conv -----------------------------------------------------------------

double conv_theorem_1d(UniformSource& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.index(1, 128), m = rng.index(1, 128);
    const RealSignal1D f(rng.vec(n)), g(rng.vec(m));
    const auto direct = conv_direct_1d(f, g);
    const auto spectral = conv_spectral_1d(f, g, ConvPlan::make(n, m));
    worst = std::max(worst, max_abs_diff(direct.samples(), spectral.samples()) / double(n + m - 1));
  }
  return worst;
}

double conv_theorem_2d(UniformSource& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t ir = rng.index(1, 16), ic = rng.index(1, 16);
    const std::size_t kr = rng.index(1, 16), kc = rng.index(1, 16);
    const RealSignal2D f(ir, ic, rng.vec(ir * ic)), g(kr, kc, rng.vec(kr * kc));
    const auto direct = conv_direct_2d(f, g);
    const auto spectral = conv_spectral_2d(f, g, ConvPlan::make_2d(ir, ic, kr, kc));
    const double area = double(direct.rows() * direct.cols());
    worst = std::max(worst, max_abs_diff(direct.data(), spectral.data()) / area);
  }
  return worst;
}

double conv_same_mode(UniformSource& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = rng.index(1, 128), m = rng.index(1, n);
    const RealSignal1D f(rng.vec(n)), g(rng.vec(m));
    const auto want = trim_same(conv_direct_1d(f, g), n, m);
    const auto got = conv_spectral_1d(f, g, ConvPlan::make(n, m, ConvMode::Same));
    worst = std::max(worst, max_abs_diff(got.samples(), want.samples()) / double(n + m - 1));
  }
  return worst;
}

double conv_commutativity(UniformSource& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = rng.index(1, 64), m = rng.index(1, 64);
    const RealSignal1D f(rng.vec(n)), g(rng.vec(m));
    worst = std::max(worst,
                     max_abs_diff(conv_direct_1d(f, g).samples(), conv_direct_1d(g, f).samples()));
  }
  return worst;
}

// ---- activations ----------------------------------------------------------

double relu_ft_quadrature(UniformSource&) {
  double worst = 0.0;
  for (double omega : linspace(-8.0, 8.0, 10)) {
    for (double k : linspace(0.25, 3.0, 10)) {
      const Complex oracle =
          continuous_ft_quadrature([](double x) { return x; }, omega, {0.0, k, {16, 1e-13}});
      worst = std::max(worst, rel(relu_ft(omega, k), oracle));
    }
  }
  return worst;
}

double relu_ft_crossover(UniformSource&) {
  double worst = 0.0;
  for (double k : {0.25, 1.0, 3.0}) {
    const double at = kReluSeriesCrossover / k;
    worst = std::max(worst, std::abs(relu_ft(std::nextafter(at, 0.0), k) - relu_ft(at, k)));
  }
  return worst;
}

double relu_ft_zero_frequency(UniformSource&) {
  double worst = 0.0;
  for (double k : linspace(0.25, 3.0, 10)) {
    worst = std::max(worst, std::abs(relu_ft(0.0, k) - Complex(k * k / 2.0, 0.0)));
  }
  return worst;
}

double sigmoid_ft_antiderivative_grid(UniformSource&) {
  double worst = 0.0;
  for (double omega : {0.0, 0.5, -0.5, 2.0, -2.0}) {
    for (double x : linspace(-5.0, -0.5, 20)) {
      auto f = [&](double t) { return sigmoid_ft_antiderivative(t, omega); };
      worst = std::max(worst, rel(central_diff(f, x), sigmoid_ft_integrand(x, omega)));
    }
  }
  return worst;
}

double hyp2f1_log_case(UniformSource&) {
  return std::abs(hyp2f1({1.0, 1.0, 2.0, 0.5}).value - Complex(-std::log(0.5) / 0.5, 0.0));
}

double lorentzian_mass_quadrature(UniformSource&) {
  double worst = 0.0;
  for (auto [beta, w] : {std::pair{1.0, 1.0}, {0.5, 3.0}, {0.1, 50.0}, {2.0, 0.5}}) {
    worst = std::max(worst, std::abs(lorentzian_mass(beta, w) - 2.0 * std::atan(w / beta)));
  }
  return worst;
}

double lorentzian_mass_limit(UniformSource&) {
  return std::abs(lorentzian_mass(0.01, 100.0) - kPi);
}

// ---- pooling --------------------------------------------------------------

double box_ft_quadrature(UniformSource&) {
  const BoxKernel box(2.0, 2.0);
  // The outer tolerance sits above the inner one so per-row quadrature noise
  // cannot stall the outer refinement.
  const QuadratureSpec x_side{-1.0, 1.0, {16, 1e-11}};
  const QuadratureSpec y_side{-1.0, 1.0, {16, 1e-9}};
  double worst = 0.0;
  // Grid offset from the zeros of sinc(2u) at multiples of 1/2.
  for (double u : {-1.3, -0.7, 0.1, 0.35, 0.9}) {
    for (double v : {-1.1, -0.3, 0.0, 0.6, 1.4}) {
      const Complex q = continuous_ft2_quadrature(
          [&](double x, double y) { return box(x, y); }, u, v, x_side, y_side);
      worst = std::max(worst, rel(q, Complex(box_ft(box, u, v), 0.0)));
    }
  }
  return worst;
}

double truncate_constant(UniformSource&) {
  double worst = 0.0;
  for (auto [oh, ow] : {std::pair<std::size_t, std::size_t>{4, 4}, {2, 8}, {1, 1}, {8, 2}}) {
    const auto spec = dft_2d(RealSignal2D(8, 8, std::vector<double>(64, 0.625)));
    const auto pooled = idft_2d(spectral_pool_truncate(spec, {oh, ow}));
    for (double v : pooled.data()) {
      worst = std::max(worst, std::abs(v - 0.625));
    }
  }
  return worst;
}

double truncate_in_band(UniformSource&) {
  double worst = 0.0;
  for (auto [fy, fx] : {std::pair<int, int>{0, 1}, {1, 0}, {2, -3}, {3, 3}, {-1, 2}}) {
    const auto spec = dft_2d(RealSignal2D(32, 32, cosine_grid(32, 32, fy, fx)));
    const auto pooled = idft_2d(spectral_pool_truncate(spec, {8, 8}));
    worst = std::max(worst, max_abs_diff(pooled.data(), cosine_grid(8, 8, fy, fx)));
  }
  return worst;
}

double gap_equivalence(UniformSource& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t h = std::size_t{1} << rng.index(0, 5);
    const std::size_t w = std::size_t{1} << rng.index(0, 5);
    const RealSignal2D s(h, w, rng.vec(h * w));
    worst = std::max(worst, std::abs(gap_spatial(s) - gap_spectral(dft_2d(s))));
  }
  return worst;
}

// ---- loss -----------------------------------------------------------------

double bce_exp_identity(UniformSource&) {
  double worst = 0.0;
  for (int y : {0, 1}) {
    for (int k = 1; k <= 99; ++k) {
      const auto s = bce_exp_identity_check({y, k / 100.0});
      worst = std::max(worst, rel(s.lhs, s.rhs));
    }
  }
  return worst;
}

double bce_antiderivative(UniformSource&) {
  double worst = 0.0;
  for (int y : {0, 1}) {
    const BceInput in{y, 0.35};
    const double amplitude = std::pow(0.35, -y) * std::pow(0.65, y - 1.0);
    for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      for (double omega : {-3.0, -0.5, 0.25, 1.0, 4.0}) {
        auto f = [&](double t) { return bce_ft_antiderivative(t, omega, in); };
        worst = std::max(worst, rel(central_diff(f, x), amplitude * std::exp(Complex{0, -omega * x})));
      }
    }
  }
  return worst;
}

// ---- laplace --------------------------------------------------------------

const double kLaplacePoints[] = {0.5, 1.0, 2.0, 5.0};

double textbook_transform(const std::function<double(double)>& f,
                          const std::function<double(double)>& closed) {
  double worst = 0.0;
  for (double p : kLaplacePoints) {
    const LaplacePoint point(p);
    const CausalSignal s(f, suggest_horizon(f, point, 20.0 / p));
    worst = std::max(worst, std::abs(laplace_numeric(s, point) - closed(p)));
  }
  return worst;
}

double laplace_conv_theorem(UniformSource&) {
  const std::function<double(double)> one = [](double) { return 1.0; };
  const std::function<double(double)> ramp = [](double t) { return t; };
  const std::function<double(double)> decay = [](double t) { return std::exp(-t); };
  const std::pair<std::function<double(double)>, std::function<double(double)>> pairs[] = {
      {one, one}, {decay, ramp}, {ramp, ramp}};
  double worst = 0.0;
  for (const auto& [a, b] : pairs) {
    for (double p : kLaplacePoints) {
      const LaplacePoint point(p);
      const CausalSignal f1(a, suggest_horizon(a, point, 20.0 / p));
      const CausalSignal f2(b, suggest_horizon(b, point, 20.0 / p));
      const auto sides = laplace_conv_theorem_check(f1, f2, point);
      worst = std::max(worst, std::abs(sides.lhs - sides.rhs) / std::max(std::abs(sides.lhs), 1.0));
    }
  }
  return worst;
}

const std::vector<double> kReluP = linspace(0.25, 8.0, 10);
const std::vector<double> kReluK = linspace(0.25, 4.0, 10);

double relu_lt_quadrature(UniformSource&) {
  double worst = 0.0;
  for (double p : kReluP) {
    for (double k : kReluK) {
      const double oracle =
          simpson_real([p](double t) { return t * std::exp(-p * t); }, {0.0, k, {16, 1e-13}});
      worst = std::max(worst, rel(relu_lt(LaplacePoint(p), k), oracle));
    }
  }
  return worst;
}

double relu_lt_printed_gap(UniformSource&) {
  double worst = 0.0;
  for (double p : kReluP) {
    for (double k : kReluK) {
      const LaplacePoint point(p);
      worst = std::max(worst, rel(relu_lt_printed(point, k), relu_lt(point, k)));
    }
  }
  return worst;
}

double relu_lt_p_derivative(UniformSource&) {
  double worst = 0.0;
  for (auto [p, k] : {std::pair{1.0, 1.0}, {0.5, 2.0}, {2.0, 0.5}, {3.0, 3.0}}) {
    const auto d = relu_lt_p_derivative_check(LaplacePoint(p), k);
    worst = std::max(worst, rel(d.finite_difference, d.analytic));
  }
  return worst;
}

double relu_lt_p_derivative_printed_gap(UniformSource&) {
  double worst = 0.0;
  for (auto [p, k] : {std::pair{1.0, 1.0}, {0.5, 2.0}, {2.0, 0.5}, {3.0, 3.0}}) {
    const auto d = relu_lt_p_derivative_check(LaplacePoint(p), k);
    worst = std::max(worst, rel(d.printed_form, d.finite_difference));
  }
  return worst;
}

double sigmoid_lt_spatial(UniformSource& rng) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double x = rng.in(-5, 5), p = rng.in(0, 4);
    auto g = [&](double t) { return std::exp(-p * t) / (std::exp(-t) + 1.0); };
    const double fd = central_diff(g, x);
    worst = std::max(worst, std::abs(sigmoid_lt_spatial_derivative(x, p) - fd) /
                                std::max(std::abs(fd), 1e-4));
  }
  return worst;
}

double sigmoid_lt_spatial_printed_gap(UniformSource&) {
  return std::abs(sigmoid_lt_spatial_derivative_printed(0.0, 1.0) -
                  sigmoid_lt_spatial_derivative(0.0, 1.0));
}

double sigmoid_lt_antiderivative_fd(UniformSource&) {
  double worst = 0.0;
  for (auto [x, p] : {std::pair{-2.0, 0.5}, {-3.0, 3.5}, {-1.0, 0.2}, {-4.0, 1.7}}) {
    const LaplacePoint point(p);
    auto f = [&](double t) { return sigmoid_lt_antiderivative(t, point); };
    worst = std::max(worst, rel(central_diff(f, x), std::exp((1.0 - p) * x) / (std::exp(x) + 1.0)));
  }
  return worst;
}

// ---- registry -------------------------------------------------------------

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = {
      {"dft", "dft.fft_vs_naive", "discrete-fourier-transform", 1e-12, fft_vs_naive},
      {"dft", "dft.round_trip", "inverse-transform", 1e-13, fft_round_trip},
      {"dft", "dft.parseval", "energy-conservation", 1e-12, parseval},
      {"dft", "dft.derivative_sin_1d", "derivative-theorem-1d", 1e-10, derivative_sin_1d},
      {"dft", "dft.derivative_sin_2d", "derivative-theorem-2d", 1e-9, derivative_sin_2d},

      {"conv", "conv.theorem_1d", "convolution-theorem-1d", 1e-10, conv_theorem_1d},
      {"conv", "conv.theorem_2d", "convolution-theorem-2d", 1e-10, conv_theorem_2d},
      {"conv", "conv.same_mode", "convolution-theorem-1d", 1e-10, conv_same_mode},
      {"conv", "conv.commutativity", "convolution-commutativity", 0.0, conv_commutativity},

      {"activations", "activations.relu_ft_quadrature", "relu-fourier-transform", 1e-8,
       relu_ft_quadrature},
      {"activations", "activations.relu_ft_crossover", "relu-fourier-transform", 1e-9,
       relu_ft_crossover},
      {"activations", "activations.relu_ft_zero_frequency", "relu-fourier-transform", 0.0,
       relu_ft_zero_frequency},
      {"activations", "activations.sigmoid_antiderivative", "sigmoid-fourier-antiderivative", 1e-6,
       sigmoid_ft_antiderivative_grid},
      {"activations", "activations.hyp2f1_log", "gauss-hypergeometric-series", 1e-10,
       hyp2f1_log_case},
      {"activations", "activations.lorentzian_mass", "heaviside-regularization", 1e-6,
       lorentzian_mass_quadrature},
      {"activations", "activations.lorentzian_limit", "heaviside-regularization", 1e-3,
       lorentzian_mass_limit},

      {"pooling", "pooling.box_ft_quadrature", "average-pooling-sinc", 1e-7, box_ft_quadrature},
      {"pooling", "pooling.truncate_constant", "spectral-truncation-pooling", 0.0,
       truncate_constant},
      {"pooling", "pooling.truncate_in_band", "spectral-truncation-pooling", 1e-10,
       truncate_in_band},
      {"pooling", "pooling.gap_equivalence", "global-average-pooling-dc", 1e-12, gap_equivalence},

      {"loss", "loss.exp_identity", "binary-cross-entropy-exponential", 1e-12, bce_exp_identity},
      {"loss", "loss.antiderivative", "binary-cross-entropy-fourier-antiderivative", 1e-6,
       bce_antiderivative},

      {"laplace", "laplace.textbook_constant", "laplace-transform-definition", 1e-7,
       [](UniformSource&) {
         return textbook_transform([](double) { return 1.0; }, [](double p) { return 1.0 / p; });
       }},
      {"laplace", "laplace.textbook_ramp", "laplace-transform-definition", 1e-7,
       [](UniformSource&) {
         return textbook_transform([](double t) { return t; },
                                   [](double p) { return 1.0 / (p * p); });
       }},
      {"laplace", "laplace.textbook_decay", "laplace-transform-definition", 1e-7,
       [](UniformSource&) {
         return textbook_transform([](double t) { return std::exp(-t); },
                                   [](double p) { return 1.0 / (p + 1.0); });
       }},
      {"laplace", "laplace.conv_theorem", "laplace-convolution-theorem", 1e-4,
       laplace_conv_theorem},
      {"laplace", "laplace.relu_lt_quadrature", "relu-laplace-transform", 1e-8,
       relu_lt_quadrature},
      {"laplace", "laplace.relu_lt_printed_gap", "relu-laplace-transform-printed-sign", kInf,
       relu_lt_printed_gap},
      {"laplace", "laplace.relu_lt_p_derivative", "relu-laplace-p-derivative", 1e-6,
       relu_lt_p_derivative},
      {"laplace", "laplace.relu_lt_p_derivative_printed_gap",
       "relu-laplace-p-derivative-printed-sign", kInf, relu_lt_p_derivative_printed_gap},
      {"laplace", "laplace.sigmoid_spatial_derivative", "sigmoid-laplace-spatial-derivative",
       1e-6, sigmoid_lt_spatial},
      {"laplace", "laplace.sigmoid_spatial_printed_gap",
       "sigmoid-laplace-spatial-derivative-printed-sign", kInf, sigmoid_lt_spatial_printed_gap},
      {"laplace", "laplace.sigmoid_antiderivative", "sigmoid-laplace-antiderivative", 1e-6,
       sigmoid_lt_antiderivative_fd},
  };
  return checks;
}

constexpr std::string_view kBenchGate = "bench.gate";
constexpr double kBenchGateTol = 1e-10;

double tolerance_for(const SuiteConfig& config, std::string_view name, double fallback) {
  const auto it = config.tolerance_overrides.find(std::string(name));
  return it == config.tolerance_overrides.end() ? fallback : it->second;
}

CheckRecord run_check(const Check& check, const SuiteConfig& config) {
  CheckRecord rec;
  rec.check = check.name;
  rec.anchor = check.anchor;
  rec.informational = std::isinf(check.tolerance);
  rec.tolerance = rec.informational ? kInf : tolerance_for(config, check.name, check.tolerance);
  UniformSource rng(check_seed(config.seed, check.name));
  const auto start = Clock::now();
  try {
    rec.error = check.measure(rng);
    rec.pass = rec.informational || rec.error <= rec.tolerance;
  } catch (const Error&) {
    rec.error = kInf;
    rec.pass = false;
  }
  rec.ns = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
  return rec;
}

std::int64_t median_ns(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

template <typename F>
std::int64_t time_once(F&& f) {
  const auto start = Clock::now();
  f();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

constexpr std::size_t kBenchRepetitions = 7;

struct GateOutcome {
  CheckRecord record;
  std::optional<BenchRecord> timing;
};

// Correctness gate at one size; only timed when the gate passes.
GateOutcome bench_size(std::size_t n, const SuiteConfig& config) {
  GateOutcome out;
  auto& rec = out.record;
  rec.check = std::string(kBenchGate) + "_n" + std::to_string(n);
  rec.anchor = "convolution-theorem-1d";
  rec.tolerance = tolerance_for(config, kBenchGate, kBenchGateTol);

  UniformSource rng(check_seed(config.seed, rec.check));
  const RealSignal1D f(rng.vec(n)), g(rng.vec(n));
  const auto plan = ConvPlan::make(n, n);
  const auto start = Clock::now();
  const auto direct = conv_direct_1d(f, g);
  const auto spectral = conv_spectral_1d(f, g, plan);
  rec.error = max_abs_diff(direct.samples(), spectral.samples()) / double(2 * n - 1);
  rec.pass = rec.error <= rec.tolerance;
  if (rec.pass) {
    std::vector<std::int64_t> d, s;
    for (std::size_t r = 0; r < kBenchRepetitions; ++r) {
      d.push_back(time_once([&] { (void)conv_direct_1d(f, g); }));
      s.push_back(time_once([&] { (void)conv_spectral_1d(f, g, plan); }));
    }
    BenchRecord b{n, median_ns(d), median_ns(s), 0.0, kBenchRepetitions};
    b.ratio = double(b.direct_ns) / double(std::max<std::int64_t>(b.spectral_ns, 1));
    out.timing = b;
  }
  rec.ns = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"dft",  "conv",    "activations", "pooling",
                                                 "loss", "laplace", "bench"};
  return names;
}

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& c : registry()) names.emplace_back(c.name);
  names.emplace_back(kBenchGate);
  return names;
}

void SuiteConfig::validate() const {
  if (suites.empty()) throw UsageError("no suite selected");
  const auto& known = suite_names();
  for (const auto& s : suites) {
    if (std::find(known.begin(), known.end(), s) == known.end()) {
      throw UsageError("unknown suite '" + s + "'");
    }
  }
  const auto checks = check_names();
  for (const auto& [name, value] : tolerance_overrides) {
    if (std::find(checks.begin(), checks.end(), name) == checks.end()) {
      throw UsageError("tolerance override for unknown check '" + name + "'");
    }
    if (!(value >= 0.0)) throw UsageError("tolerance for '" + name + "' must be >= 0");
  }
  if (std::find(suites.begin(), suites.end(), "bench") != suites.end()) {
    if (sizes.empty()) throw UsageError("bench needs at least one size");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (!is_power_of_two(sizes[i])) {
        throw UsageError("bench size " + std::to_string(sizes[i]) + " is not a power of two");
      }
      if (i > 0 && sizes[i] <= sizes[i - 1]) {
        throw UsageError("bench sizes must be strictly increasing");
      }
    }
  }
}

VerificationReport run_suites(const SuiteConfig& config) {
  config.validate();
  const std::set<std::string> selected(config.suites.begin(), config.suites.end());
  VerificationReport report;
  for (const auto& check : registry()) {
    if (selected.count(std::string(check.suite))) report.records.push_back(run_check(check, config));
  }
  if (selected.count("bench")) {
    for (std::size_t n : config.sizes) {
      auto outcome = bench_size(n, config);
      const bool pass = outcome.record.pass;
      report.records.push_back(std::move(outcome.record));
      if (!pass) break;  // a failed gate aborts the sweep
      report.bench.push_back(*outcome.timing);
    }
  }
  return report;
}

std::vector<BenchRecord> run_bench(const SuiteConfig& config) {
  SuiteConfig bench_only = config;
  bench_only.suites = {"bench"};
  bench_only.validate();
  std::vector<BenchRecord> out;
  for (std::size_t n : config.sizes) {
    auto outcome = bench_size(n, config);
    if (!outcome.record.pass) {
      throw CorrectnessError("spectral convolution failed the correctness gate at n = " +
                             std::to_string(n) + " (error " +
                             std::to_string(outcome.record.error) + ")");
    }
    out.push_back(*outcome.timing);
  }
  return out;
}

}  // namespace freqcnn::verify
