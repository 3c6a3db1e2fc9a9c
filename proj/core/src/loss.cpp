#include "freqcnn/loss.hpp"

#include <cmath>
#include <string>

#include "freqcnn/errors.hpp"

namespace freqcnn {

BceInput::BceInput(int y, double p) : y_(y), p_(p) {
  if (y != 0 && y != 1) throw DomainError("BCE label must be 0 or 1, got " + std::to_string(y));
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("BCE probability must lie strictly inside (0, 1), got " +
                      std::to_string(p));
  }
}

double bce(const BceInput& input) {
  const double p = input.p();
  return input.y() == 1 ? -std::log(p) : -std::log(1.0 - p);
}

IdentitySides bce_exp_identity_check(const BceInput& input) {
  const double y = input.y();
  const double p = input.p();
  return {std::exp(bce(input)), std::pow(p, -y) * std::pow(1.0 - p, y - 1.0)};
}

Complex bce_ft_antiderivative(double x, double omega, const BceInput& input) {
  require_finite(x, "x");
  require_finite(omega, "omega");
  if (omega == 0.0) {
    throw SingularityError("bce_ft_antiderivative: 1/(-i omega) is singular at omega = 0");
  }
  const double y = input.y();
  const double p = input.p();
  const double amplitude = std::pow(p, -y) * std::pow(1.0 - p, y - 1.0);
  const Complex wave{std::cos(omega * x), -std::sin(omega * x)};
  return amplitude * wave / Complex{0.0, -omega};
}

}  // namespace freqcnn
