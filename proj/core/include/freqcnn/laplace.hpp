#pragma once

#include <functional>
#include <vector>

#include "freqcnn/hyp2f1.hpp"
#include "freqcnn/quadrature.hpp"

// Laplace-domain operators over real p > 0:
// F(p) = int_0^inf f(t) exp(-p t) dt, truncated at a finite horizon.

namespace freqcnn {

/// Real Laplace variable, strictly positive.
class LaplacePoint {
 public:
  explicit LaplacePoint(double p);
  double p() const noexcept { return p_; }

 private:
  double p_;
};

/// Signal defined for t >= 0 (zero for t < 0) together with the horizon T at
/// which its Laplace integral is truncated.
class CausalSignal {
 public:
  CausalSignal(std::function<double(double)> fn, double horizon);

  /// Piecewise-linear interpolant of samples[k] at t = k * spacing. Zero past
  /// the last sample; the horizon is the last sample's time.
  static CausalSignal from_samples(std::vector<double> samples, double spacing);

  /// f(t); zero for t < 0.
  double operator()(double t) const { return t < 0.0 ? 0.0 : fn_(t); }
  double horizon() const noexcept { return horizon_; }
  CausalSignal with_horizon(double horizon) const { return CausalSignal(fn_, horizon); }

 private:
  std::function<double(double)> fn_;
  double horizon_;
};

/// Tail bound the truncated integral must satisfy: exp(-p T) * max|f| on [0, T].
inline constexpr double kLaplaceTailTol = 1e-10;

/// Default horizon max(20 / p, 5 * support).
double default_horizon(const LaplacePoint& point, double support);

/// Smallest horizon of the form start * 2^k meeting the tail bound, with max|f|
/// estimated from 257 uniform samples on [0, T].
double suggest_horizon(const std::function<double(double)>& f, const LaplacePoint& point,
                       double start);

/// Composite-Simpson estimate of int_0^T f(t) exp(-p t) dt. Throws
/// TruncationError (with a suggested horizon) when the tail bound fails.
double laplace_numeric(const CausalSignal& f, const LaplacePoint& point,
                       const QuadratureControl& ctl = {});

/// Causal convolution int_0^t f1(tau) f2(t - tau) dtau by quadrature.
double laplace_conv_direct(const CausalSignal& f1, const CausalSignal& f2, double t,
                           const QuadratureControl& ctl = {});

/// lhs = L{f1}(p) * L{f2}(p); rhs = L{f1 * f2}(p) with every point of the
/// convolution curve computed by laplace_conv_direct. The horizon of the
/// convolution curve is chosen by suggest_horizon.
IdentitySides laplace_conv_theorem_check(const CausalSignal& f1, const CausalSignal& f2,
                                         const LaplacePoint& point);

/// exp(x - p x) / (1 - p) * 2F1(1, 1 - p; 2 - p; -exp(x)), evaluated in real
/// arithmetic. Like its Fourier counterpart it is an antiderivative in x of
/// exp((1 - p) x) / (exp(x) + 1). Needs x < 0; throws DomainError within 1e-8
/// of the poles p = 1, 2, 3, ...
double sigmoid_lt_antiderivative(double x, const LaplacePoint& point,
                                 const SeriesControl& ctl = {});

/// d/dx [exp(-p x) / (exp(-x) + 1)] = -exp(x - p x) (p exp(x) + p - 1) / (exp(x) + 1)^2.
/// Any real p, including p = 0.
double sigmoid_lt_spatial_derivative(double x, double p);

/// The same derivative with the opposite overall sign, as it is commonly
/// printed: exp(x - p x) (p exp(x) + p - 1) / (exp(x) + 1)^2. Kept for reports.
double sigmoid_lt_spatial_derivative_printed(double x, double p);

/// Below this p * k the ReLU Laplace transform switches to its Taylor series.
inline constexpr double kReluLaplaceSeriesCrossover = 1e-4;

/// int_0^k t exp(-p t) dt = (1 - exp(-p k) (1 + p k)) / p^2.
/// For p k < kReluLaplaceSeriesCrossover returns k^2/2 - p k^3/3 + p^2 k^4/8.
double relu_lt(const LaplacePoint& point, double k);

/// -(exp(-p k) (1 + p k) + 1) / p^2, the sign-flipped variant that a direct
/// quadrature rejects. Reported next to relu_lt, never used for results.
double relu_lt_printed(const LaplacePoint& point, double k);

/// d/dx [x exp(-p x)] = exp(-p x) (1 - p x).
double relu_lt_integrand_derivative(double x, const LaplacePoint& point);

struct ReluLaplaceDerivative {
  double finite_difference;  ///< central difference of relu_lt in p
  double analytic;           ///< (exp(-p k)(p^2 k^2 + 2 p k + 2) - 2) / p^3
  double printed_form;       ///< exp(-p k)(p^2 k^2 + 2 p k + 2 exp(p k) + 2) / p^3
};

/// Side-by-side values of d relu_lt / dp. Agreement is recorded by callers,
/// not asserted here.
ReluLaplaceDerivative relu_lt_p_derivative_check(const LaplacePoint& point, double k);

}  // namespace freqcnn
