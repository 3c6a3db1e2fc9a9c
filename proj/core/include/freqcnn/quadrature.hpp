#pragma once

#include <cstddef>
#include <functional>

#include "freqcnn/signal.hpp"

namespace freqcnn {

/// Panel-doubling controls for composite Simpson quadrature.
struct QuadratureControl {
  std::size_t panels = 16;          ///< starting panel count, even
  double target_rel_tol = 1e-12;    ///< stop when successive estimates agree to this
  std::size_t max_panels = std::size_t{1} << 20;
};

/// Integration interval plus controls.
struct QuadratureSpec {
  double lower = 0.0;
  double upper = 1.0;
  QuadratureControl control{};
};

struct QuadratureResult {
  Complex value;
  std::size_t panels;
};

using RealFunction = std::function<double(double)>;
using ComplexFunction = std::function<Complex(double)>;

/// Composite Simpson of a complex-valued integrand with panel doubling.
///
/// Successive estimates S_n, S_2n are accepted once
/// |S_2n - S_n| <= target_rel_tol * max(|S_2n|, integral of |f|), so an
/// integral that cancels to zero still converges. Every previously evaluated
/// node is reused after a doubling. Throws ConvergenceError carrying the last
/// estimate if max_panels is reached first.
QuadratureResult simpson(const ComplexFunction& f, const QuadratureSpec& spec);

/// Real-valued convenience wrapper around simpson().
double simpson_real(const RealFunction& f, const QuadratureSpec& spec);

/// Quadrature estimate of the angular-frequency transform
/// integral over [lower, upper] of f(x) exp(-i omega x) dx.
Complex continuous_ft_quadrature(const RealFunction& f, double omega,
                                 const QuadratureSpec& spec);

/// Ordinary-frequency 2D transform integral of f(x, y) exp(-2 pi i (u x + v y))
/// over a rectangle, by nested Simpson (outer over y, inner over x).
Complex continuous_ft2_quadrature(const std::function<double(double, double)>& f, double u,
                                  double v, const QuadratureSpec& x_spec,
                                  const QuadratureSpec& y_spec);

}  // namespace freqcnn
