#pragma once

#include "freqcnn/hyp2f1.hpp"
#include "freqcnn/quadrature.hpp"
#include "freqcnn/signal.hpp"

// Frequency-domain forms of the activation functions. One-dimensional
// transforms here use angular frequency: F(omega) = int f(x) exp(-i omega x) dx.

namespace freqcnn {

/// Logistic function 1 / (1 + exp(-x)), evaluated without overflow.
double sigmoid(double x);

/// exp((1 - i omega) x) / (exp(x) + 1), the sigmoid transform integrand.
Complex sigmoid_ft_integrand(double x, double omega);

/// i exp(x - i omega x) / (omega + i) * 2F1(1, 1 - i omega; 2 - i omega; -exp(x)).
///
/// This keeps the spatial variable x: it is an antiderivative in x of
/// sigmoid_ft_integrand(x, omega), not a function of omega alone. The series
/// form only converges for x < 0; x >= 0 throws DomainError.
Complex sigmoid_ft_antiderivative(double x, double omega, const SeriesControl& ctl = {});

/// d/dx [exp(-i omega x) / (exp(-x) + 1)]
///   = exp(x - i omega x) (1 - i omega (exp(x) + 1)) / (exp(x) + 1)^2.
Complex sigmoid_ft_spatial_derivative(double x, double omega);

/// Below this |omega| * k the ReLU transform switches to its Taylor series.
inline constexpr double kReluSeriesCrossover = 1e-4;

/// Transform of ReLU restricted to (0, k): int_0^k x exp(-i omega x) dx
///   = (exp(-i omega k) (1 + i omega k) - 1) / omega^2.
/// For |omega| k < kReluSeriesCrossover returns k^2/2 - i omega k^3/3 - omega^2 k^4/8.
Complex relu_ft(double omega, double k);

/// d/dx [x exp(-i omega x)] = exp(-i omega x) (1 - i omega x).
Complex relu_ft_backward_integrand(double x, double omega);

struct LorentzianParams {
  double beta;
  double omega;
};

/// Regularized Heaviside transform 1 / (beta + i omega), beta > 0.
Complex heaviside_ft_regularized(const LorentzianParams& params);

/// Quadrature of beta / (beta^2 + omega^2) over [-half_width, half_width].
/// The exact value 2 atan(half_width / beta) tends to pi as beta -> 0, which is
/// the mass of pi * delta(omega).
double lorentzian_mass(double beta, double half_width, const QuadratureControl& ctl = {});

}  // namespace freqcnn
