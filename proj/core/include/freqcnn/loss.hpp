#pragma once

#include "freqcnn/signal.hpp"

namespace freqcnn {

/// Binary label y in {0, 1} and predicted probability p in (0, 1).
class BceInput {
 public:
  BceInput(int y, double p);
  int y() const noexcept { return y_; }
  double p() const noexcept { return p_; }

 private:
  int y_;
  double p_;
};

/// -(y ln p + (1 - y) ln(1 - p)).
double bce(const BceInput& input);

/// exp(bce) next to p^-y (1 - p)^(y - 1); the two agree to rounding.
IdentitySides bce_exp_identity_check(const BceInput& input);

/// p^-y (1 - p)^(y - 1) exp(-i omega x) / (-i omega): an antiderivative in x of
/// exp(bce) * exp(-i omega x). Throws SingularityError at omega = 0.
Complex bce_ft_antiderivative(double x, double omega, const BceInput& input);

}  // namespace freqcnn
