#pragma once

#include "freqcnn/signal.hpp"

namespace freqcnn {

enum class Axis { X, Y };

struct DomainLengths {
  double y;
  double x;
};

/// Multiplies bin j by i * omega_j with omega_j = 2 pi j / domain_length
/// (angular convention, signed j). The Nyquist bin of an even-length spectrum
/// is zeroed.
ComplexSpectrum1D spectral_derivative_1d(const ComplexSpectrum1D& spectrum,
                                         double domain_length);

/// Per-axis derivative with the ordinary-frequency convention: bin j along the
/// chosen axis is multiplied by i 2 pi u_j, u_j = j / domain_length (signed j).
/// X differentiates along columns, Y along rows. Nyquist bins on that axis are
/// zeroed.
ComplexSpectrum2D spectral_derivative_2d(const ComplexSpectrum2D& spectrum, Axis axis,
                                         DomainLengths lengths);

}  // namespace freqcnn
