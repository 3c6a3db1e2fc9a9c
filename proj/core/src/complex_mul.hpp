#pragma once

#include "freqcnn/signal.hpp"

namespace freqcnn::detail {

// Plain (a+bi)(c+di). std::complex operator* routes through the C99 Annex G
// inf/nan recovery path, which dominates FFT time for small sizes.
inline Complex cmul(const Complex& x, const Complex& y) {
  return {x.real() * y.real() - x.imag() * y.imag(), x.real() * y.imag() + x.imag() * y.real()};
}

}  // namespace freqcnn::detail
