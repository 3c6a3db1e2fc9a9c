#include "freqcnn/hyp2f1.hpp"

#include <cmath>
#include <string>

#include "freqcnn/errors.hpp"

namespace freqcnn {

namespace {

bool is_non_positive_integer(Complex c) {
  return c.imag() == 0.0 && c.real() <= 0.0 && std::floor(c.real()) == c.real();
}

}  // namespace

SeriesResult hyp2f1(const Hyp2F1Params& params, const SeriesControl& ctl) {
  require_finite(params.a, "hyp2f1 a");
  require_finite(params.b, "hyp2f1 b");
  require_finite(params.c, "hyp2f1 c");
  require_finite(params.z, "hyp2f1 z");
  if (!(ctl.rel_tol > 0.0)) throw DomainError("hyp2f1 rel_tol must be positive");
  if (std::abs(params.z) >= 1.0) {
    throw DomainError("hyp2f1 series requires |z| < 1, got |z| = " +
                      std::to_string(std::abs(params.z)));
  }
  if (is_non_positive_integer(params.c)) {
    throw DomainError("hyp2f1 parameter c is a non-positive integer");
  }

  Complex term{1.0, 0.0};
  Complex sum = term;
  for (std::size_t n = 0; n + 1 < ctl.max_terms; ++n) {
    const double k = static_cast<double>(n);
    term *= (params.a + k) * (params.b + k) / ((params.c + k) * (k + 1.0)) * params.z;
    sum += term;
    if (std::abs(term) < ctl.rel_tol * std::abs(sum)) return {sum, n + 2};
  }
  throw ConvergenceError("hyp2f1 series did not converge within " +
                             std::to_string(ctl.max_terms) + " terms",
                         sum);
}

}  // namespace freqcnn
