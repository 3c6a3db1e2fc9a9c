#include "freqcnn/activations.hpp"

#include <cmath>
#include <string>

#include "freqcnn/errors.hpp"

namespace freqcnn {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite and strictly positive");
  }
}

}  // namespace

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

Complex sigmoid_ft_integrand(double x, double omega) {
  require_finite(x, "x");
  require_finite(omega, "omega");
  return std::exp(x) * phase(-omega * x) / (std::exp(x) + 1.0);
}

Complex sigmoid_ft_antiderivative(double x, double omega, const SeriesControl& ctl) {
  require_finite(x, "x");
  require_finite(omega, "omega");
  if (!(x < 0.0)) {
    throw DomainError("sigmoid_ft_antiderivative: series form needs x < 0 (|-exp(x)| < 1)");
  }
  const Complex b{1.0, -omega};
  const SeriesResult series =
      hyp2f1({Complex{1.0, 0.0}, b, b + 1.0, Complex{-std::exp(x), 0.0}}, ctl);
  const Complex prefactor = kI * std::exp(x) * phase(-omega * x) / (Complex{omega, 1.0});
  return prefactor * series.value;
}

Complex sigmoid_ft_spatial_derivative(double x, double omega) {
  require_finite(x, "x");
  require_finite(omega, "omega");
  const double ex = std::exp(x);
  const double denom = (ex + 1.0) * (ex + 1.0);
  return ex * phase(-omega * x) * (1.0 - kI * omega * (ex + 1.0)) / denom;
}

Complex relu_ft(double omega, double k) {
  require_finite(omega, "omega");
  require_positive(k, "relu_ft k");
  const double theta = omega * k;
  if (std::abs(theta) < kReluSeriesCrossover) {
    const double k2 = k * k;
    return {k2 / 2.0 - omega * omega * k2 * k2 / 8.0, -omega * k2 * k / 3.0};
  }
  // exp(-i theta)(1 + i theta) - 1 with the real part rewritten through the
  // half-angle identity cos(theta) - 1 = -2 sin^2(theta / 2) so that the
  // leading theta^2 / 2 is not lost to cancellation near the crossover.
  const double s_half = std::sin(theta / 2.0);
  const double re = theta * std::sin(theta) - 2.0 * s_half * s_half;
  const double im = theta * std::cos(theta) - std::sin(theta);
  const double inv_w2 = 1.0 / (omega * omega);
  return {re * inv_w2, im * inv_w2};
}

Complex relu_ft_backward_integrand(double x, double omega) {
  require_finite(x, "x");
  require_finite(omega, "omega");
  return phase(-omega * x) * Complex{1.0, -omega * x};
}

Complex heaviside_ft_regularized(const LorentzianParams& params) {
  require_positive(params.beta, "Lorentzian beta");
  require_finite(params.omega, "omega");
  return 1.0 / Complex{params.beta, params.omega};
}

double lorentzian_mass(double beta, double half_width, const QuadratureControl& ctl) {
  require_positive(beta, "Lorentzian beta");
  require_positive(half_width, "Lorentzian half width");
  const double b2 = beta * beta;
  return simpson_real([beta, b2](double w) { return beta / (b2 + w * w); },
                      QuadratureSpec{-half_width, half_width, ctl});
}

}  // namespace freqcnn
