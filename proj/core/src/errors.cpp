#include "freqcnn/errors.hpp"

#include <cmath>

namespace freqcnn {

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

void require_finite(std::complex<double> value, const char* what) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

}  // namespace freqcnn
