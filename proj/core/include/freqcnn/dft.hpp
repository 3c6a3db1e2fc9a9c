#pragma once

#include <span>

#include "freqcnn/signal.hpp"

// Normalization convention used throughout: the forward transform is
// unnormalized, X[j] = sum_k x[k] exp(-2 pi i j k / n), and every inverse
// carries the 1/n factor.

namespace freqcnn {

enum class Direction { Forward, Inverse };

/// O(n^2) DFT by direct summation in ascending k. Any length.
ComplexSpectrum1D dft_naive_1d(const RealSignal1D& signal);

/// O(n^2) inverse DFT of arbitrary length, complex output.
std::vector<Complex> idft_naive_1d(std::span<const Complex> coeffs);

/// In-place iterative radix-2 FFT. Inverse includes the 1/n factor.
/// Throws LengthError unless data.size() is a power of two.
void fft_inplace(std::span<Complex> data, Direction dir);

/// Radix-2 FFT of a real signal; length must be a power of two.
ComplexSpectrum1D fft_1d(const RealSignal1D& signal);

/// Inverse FFT back to a real signal. Imaginary residue up to
/// 1e-10 * max|coeff| is discarded; anything larger throws NonRealSpectrumError.
RealSignal1D ifft_1d(const ComplexSpectrum1D& spectrum, double spacing = 1.0,
                     double origin = 0.0);

/// Separable row-column FFT; both dimensions must be powers of two.
ComplexSpectrum2D dft_2d(const RealSignal2D& signal);

/// Inverse of dft_2d with the same residue rule as ifft_1d.
RealSignal2D idft_2d(const ComplexSpectrum2D& spectrum, double dy = 1.0, double dx = 1.0);

/// Doubly-nested O((HW)^2) 2D DFT, any dimensions.
ComplexSpectrum2D dft_naive_2d(const RealSignal2D& signal);

/// O((HW)^2) inverse 2D DFT of any dimensions, with the ifft_1d residue rule.
RealSignal2D idft_naive_2d(const ComplexSpectrum2D& spectrum, double dy = 1.0,
                           double dx = 1.0);

/// Relative imaginary residue above which an inverse is rejected as non-real.
inline constexpr double kImaginaryResidueTol = 1e-10;

}  // namespace freqcnn
