#include "freqcnn/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "freqcnn/errors.hpp"

namespace freqcnn {

namespace {

void validate(const QuadratureSpec& spec) {
  require_finite(spec.lower, "quadrature lower bound");
  require_finite(spec.upper, "quadrature upper bound");
  if (!(spec.upper > spec.lower)) {
    throw DomainError("quadrature requires upper > lower");
  }
  const auto& c = spec.control;
  if (c.panels < 2 || c.panels % 2 != 0) {
    throw DomainError("quadrature panel count must be even and >= 2");
  }
  if (c.max_panels < c.panels) throw DomainError("quadrature max_panels below starting panels");
  if (!(c.target_rel_tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
}

}  // namespace

QuadratureResult simpson(const ComplexFunction& f, const QuadratureSpec& spec) {
  validate(spec);
  const double a = spec.lower;
  const double b = spec.upper;
  const double width = b - a;

  // Node sums kept across doublings: endpoints, even interior, odd interior.
  // The magnitude sums track the integral of |f| with the same weights.
  std::size_t n = spec.control.panels;
  const Complex fa = f(a);
  const Complex fb = f(b);
  require_finite(fa, "quadrature integrand");
  require_finite(fb, "quadrature integrand");
  Complex ends = fa + fb;
  double ends_abs = std::abs(fa) + std::abs(fb);
  Complex evens{0.0, 0.0};
  double evens_abs = 0.0;
  Complex odds{0.0, 0.0};
  double odds_abs = 0.0;

  auto accumulate_odd_nodes = [&](std::size_t panels) {
    const double h = width / static_cast<double>(panels);
    Complex sum{0.0, 0.0};
    double sum_abs = 0.0;
    for (std::size_t k = 1; k < panels; k += 2) {
      const Complex v = f(a + static_cast<double>(k) * h);
      require_finite(v, "quadrature integrand");
      sum += v;
      sum_abs += std::abs(v);
    }
    odds = sum;
    odds_abs = sum_abs;
  };

  // Initial even interior nodes at spacing width / n.
  {
    const double h = width / static_cast<double>(n);
    for (std::size_t k = 2; k < n; k += 2) {
      const Complex v = f(a + static_cast<double>(k) * h);
      require_finite(v, "quadrature integrand");
      evens += v;
      evens_abs += std::abs(v);
    }
  }
  accumulate_odd_nodes(n);

  auto estimate = [&](std::size_t panels) {
    const double h = width / static_cast<double>(panels);
    return h / 3.0 * (ends + 4.0 * odds + 2.0 * evens);
  };
  auto estimate_abs = [&](std::size_t panels) {
    const double h = width / static_cast<double>(panels);
    return h / 3.0 * (ends_abs + 4.0 * odds_abs + 2.0 * evens_abs);
  };

  Complex previous = estimate(n);
  while (n < spec.control.max_panels) {
    // The old odd nodes become even nodes of the refined grid.
    evens += odds;
    evens_abs += odds_abs;
    n *= 2;
    accumulate_odd_nodes(n);
    const Complex current = estimate(n);
    const double scale = std::max(std::abs(current), estimate_abs(n));
    if (std::abs(current - previous) <= spec.control.target_rel_tol * scale) {
      return {current, n};
    }
    previous = current;
  }
  throw ConvergenceError("quadrature did not converge within " +
                             std::to_string(spec.control.max_panels) + " panels",
                         previous);
}

double simpson_real(const RealFunction& f, const QuadratureSpec& spec) {
  return simpson([&f](double x) { return Complex{f(x), 0.0}; }, spec).value.real();
}

Complex continuous_ft_quadrature(const RealFunction& f, double omega,
                                 const QuadratureSpec& spec) {
  require_finite(omega, "omega");
  return simpson(
             [&](double x) {
               const double fx = f(x);
               return Complex{fx * std::cos(omega * x), -fx * std::sin(omega * x)};
             },
             spec)
      .value;
}

Complex continuous_ft2_quadrature(const std::function<double(double, double)>& f, double u,
                                  double v, const QuadratureSpec& x_spec,
                                  const QuadratureSpec& y_spec) {
  require_finite(u, "u");
  require_finite(v, "v");
  const double two_pi = 2.0 * std::numbers::pi;
  auto inner = [&](double y) {
    const Complex row = simpson(
                            [&](double x) {
                              const double phase = -two_pi * (u * x + v * y);
                              return f(x, y) * Complex{std::cos(phase), std::sin(phase)};
                            },
                            x_spec)
                            .value;
    return row;
  };
  return simpson(inner, y_spec).value;
}

}  // namespace freqcnn
