#include "freqcnn/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "freqcnn/errors.hpp"

namespace freqcnn {

namespace {

constexpr double kPoleGuard = 1e-8;
constexpr int kMaxHorizonDoublings = 60;

double max_abs_on(const std::function<double(double)>& f, double horizon) {
  constexpr int kSamples = 256;
  double m = 0.0;
  for (int i = 0; i <= kSamples; ++i) {
    m = std::max(m, std::abs(f(horizon * static_cast<double>(i) / kSamples)));
  }
  return m;
}

bool tail_ok(const std::function<double(double)>& f, double p, double horizon) {
  return std::exp(-p * horizon) * max_abs_on(f, horizon) <= kLaplaceTailTol;
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite and strictly positive");
  }
}

}  // namespace

LaplacePoint::LaplacePoint(double p) : p_(p) { require_positive(p, "Laplace variable p"); }

CausalSignal::CausalSignal(std::function<double(double)> fn, double horizon)
    : fn_(std::move(fn)), horizon_(horizon) {
  if (!fn_) throw DomainError("CausalSignal requires a callable");
  require_positive(horizon, "CausalSignal horizon");
}

CausalSignal CausalSignal::from_samples(std::vector<double> samples, double spacing) {
  if (samples.size() < 2) throw LengthError("CausalSignal::from_samples needs >= 2 samples");
  require_positive(spacing, "CausalSignal sample spacing");
  for (double s : samples) require_finite(s, "CausalSignal sample");
  const double horizon = spacing * static_cast<double>(samples.size() - 1);
  auto interp = [samples = std::move(samples), spacing](double t) {
    const double pos = t / spacing;
    if (pos >= static_cast<double>(samples.size() - 1)) {
      return pos == static_cast<double>(samples.size() - 1) ? samples.back() : 0.0;
    }
    const auto k = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(k);
    return samples[k] + frac * (samples[k + 1] - samples[k]);
  };
  return CausalSignal(std::move(interp), horizon);
}

double default_horizon(const LaplacePoint& point, double support) {
  return std::max(20.0 / point.p(), 5.0 * support);
}

double suggest_horizon(const std::function<double(double)>& f, const LaplacePoint& point,
                       double start) {
  require_positive(start, "starting horizon");
  double horizon = start;
  for (int i = 0; i < kMaxHorizonDoublings; ++i, horizon *= 2.0) {
    if (tail_ok(f, point.p(), horizon)) return horizon;
  }
  throw TruncationError("no horizon up to " + std::to_string(horizon) +
                            " satisfies the Laplace tail bound",
                        horizon);
}

double laplace_numeric(const CausalSignal& f, const LaplacePoint& point,
                       const QuadratureControl& ctl) {
  const double p = point.p();
  const double horizon = f.horizon();
  auto fn = [&f](double t) { return f(t); };
  if (!tail_ok(fn, p, horizon)) {
    const double suggested = suggest_horizon(fn, point, horizon * 2.0);
    throw TruncationError("laplace_numeric: exp(-p T) max|f| exceeds " +
                              std::to_string(kLaplaceTailTol) + " at T = " +
                              std::to_string(horizon) + "; try T = " + std::to_string(suggested),
                          suggested);
  }
  // One Simpson run over a horizon many decay lengths long would spend most of
  // its nodes in the tail; windows of a few decay lengths each converge quickly.
  const auto integrand = [&f, p](double t) { return f(t) * std::exp(-p * t); };
  const double window = 4.0 / p;
  const auto windows = static_cast<std::size_t>(std::ceil(horizon / window));
  double total = 0.0;
  for (std::size_t w = 0; w < windows; ++w) {
    const double lo = static_cast<double>(w) * window;
    const double hi = w + 1 == windows ? horizon : static_cast<double>(w + 1) * window;
    if (hi > lo) total += simpson_real(integrand, QuadratureSpec{lo, hi, ctl});
  }
  return total;
}

double laplace_conv_direct(const CausalSignal& f1, const CausalSignal& f2, double t,
                           const QuadratureControl& ctl) {
  require_finite(t, "t");
  if (t < 0.0) throw DomainError("laplace_conv_direct requires t >= 0");
  if (t == 0.0) return 0.0;
  return simpson_real([&](double tau) { return f1(tau) * f2(t - tau); },
                      QuadratureSpec{0.0, t, ctl});
}

IdentitySides laplace_conv_theorem_check(const CausalSignal& f1, const CausalSignal& f2,
                                         const LaplacePoint& point) {
  const QuadratureControl outer{16, 1e-9, std::size_t{1} << 20};
  const QuadratureControl inner{16, 1e-10, std::size_t{1} << 20};

  const double lhs = laplace_numeric(f1, point, outer) * laplace_numeric(f2, point, outer);

  std::function<double(double)> curve = [&](double t) {
    return laplace_conv_direct(f1, f2, t, inner);
  };
  const double start = std::max(f1.horizon(), f2.horizon());
  const CausalSignal conv(curve, suggest_horizon(curve, point, start));
  const double rhs = laplace_numeric(conv, point, outer);
  return {lhs, rhs};
}

double sigmoid_lt_antiderivative(double x, const LaplacePoint& point, const SeriesControl& ctl) {
  require_finite(x, "x");
  const double p = point.p();
  if (!(x < 0.0)) {
    throw DomainError("sigmoid_lt_antiderivative: series form needs x < 0 (|-exp(x)| < 1)");
  }
  if (std::abs(1.0 - p) < kPoleGuard) {
    throw DomainError("sigmoid_lt_antiderivative: p is within 1e-8 of the pole at p = 1");
  }
  const double nearest = std::round(p);
  if (nearest >= 2.0 && std::abs(p - nearest) < kPoleGuard) {
    throw DomainError("sigmoid_lt_antiderivative: p is within 1e-8 of the pole at p = " +
                      std::to_string(static_cast<long>(nearest)));
  }
  const double b = 1.0 - p;
  const SeriesResult series = hyp2f1(
      {Complex{1.0, 0.0}, Complex{b, 0.0}, Complex{b + 1.0, 0.0}, Complex{-std::exp(x), 0.0}},
      ctl);
  return std::exp(b * x) / b * series.value.real();
}

double sigmoid_lt_spatial_derivative(double x, double p) {
  return -sigmoid_lt_spatial_derivative_printed(x, p);
}

double sigmoid_lt_spatial_derivative_printed(double x, double p) {
  require_finite(x, "x");
  require_finite(p, "p");
  const double ex = std::exp(x);
  return std::exp(x - p * x) * (p * ex + p - 1.0) / ((ex + 1.0) * (ex + 1.0));
}

double relu_lt(const LaplacePoint& point, double k) {
  require_positive(k, "relu_lt k");
  const double p = point.p();
  const double theta = p * k;
  if (theta < kReluLaplaceSeriesCrossover) {
    const double k2 = k * k;
    return k2 / 2.0 - p * k2 * k / 3.0 + p * p * k2 * k2 / 8.0;
  }
  // 1 - exp(-theta)(1 + theta) = -expm1(-theta) - theta exp(-theta)
  const double numerator = -std::expm1(-theta) - theta * std::exp(-theta);
  return numerator / (p * p);
}

double relu_lt_printed(const LaplacePoint& point, double k) {
  require_positive(k, "relu_lt k");
  const double p = point.p();
  return -(std::exp(-p * k) * (1.0 + p * k) + 1.0) / (p * p);
}

double relu_lt_integrand_derivative(double x, const LaplacePoint& point) {
  require_finite(x, "x");
  const double p = point.p();
  return std::exp(-p * x) * (1.0 - p * x);
}

ReluLaplaceDerivative relu_lt_p_derivative_check(const LaplacePoint& point, double k) {
  require_positive(k, "relu_lt k");
  const double p = point.p();
  const double h = std::min(1e-5 * std::max(p, 1.0), p / 2.0);
  const double fd =
      (relu_lt(LaplacePoint(p + h), k) - relu_lt(LaplacePoint(p - h), k)) / (2.0 * h);
  const double e = std::exp(-p * k);
  const double pk = p * k;
  const double p3 = p * p * p;
  // The closed form cancels catastrophically for small p k; use its series there.
  const double analytic =
      pk < 1e-3 ? -k * k * k / 3.0 + p * k * k * k * k / 4.0 - p * p * std::pow(k, 5) / 10.0
                : (e * (pk * pk + 2.0 * pk + 2.0) - 2.0) / p3;
  const double printed = e * (pk * pk + 2.0 * pk + 2.0 * std::exp(pk) + 2.0) / p3;
  return {fd, analytic, printed};
}

}  // namespace freqcnn
