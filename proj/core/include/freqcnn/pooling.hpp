#pragma once

#include <cstddef>

#include "freqcnn/signal.hpp"

// Pooling and global-average operators in the spatial and frequency domains.
// Two-dimensional transforms use ordinary frequency (u, v):
// F(u, v) = int int f(x, y) exp(-2 pi i (u x + v y)) dx dy.

namespace freqcnn {

/// Normalized sinc, sin(pi t) / (pi t) with sinc(0) = 1. Integer t gives an
/// exact zero.
double sinc(double t);

/// Continuous averaging box of width w along x and height h along y with
/// amplitude 1 / (w h), so its total mass is 1.
class BoxKernel {
 public:
  BoxKernel(double width, double height);
  double width() const noexcept { return width_; }
  double height() const noexcept { return height_; }
  double amplitude() const noexcept { return 1.0 / (width_ * height_); }
  /// Kernel value; zero outside |x| < w/2, |y| < h/2 (boundary counts as inside).
  double operator()(double x, double y) const;

 private:
  double width_;
  double height_;
};

/// Transform of the box: sinc(w u) * sinc(h v).
double box_ft(const BoxKernel& kernel, double u, double v);

struct PoolWindow {
  std::size_t rows;
  std::size_t cols;
};

/// Non-overlapping window means. Throws LengthError unless each dimension is
/// divisible by the window.
RealSignal2D avg_pool_direct(const RealSignal2D& signal, PoolWindow window);

struct TruncationSpec {
  std::size_t out_rows;
  std::size_t out_cols;
};

/// Keeps the out_rows x out_cols lowest frequencies of a spectrum and rescales
/// by (out_rows * out_cols) / (rows * cols), so a constant image pools to the
/// same constant.
///
/// Along an axis with odd output size m, signed frequencies -(m-1)/2..(m-1)/2
/// are kept. With even m, frequencies -m/2+1..m/2-1 are kept and the output
/// Nyquist bin holds the mean of the input bins at +m/2 and -m/2 (one bin when
/// m equals the input size). That keeps the result conjugate symmetric, so its
/// inverse is real, and never increases spectral energy.
ComplexSpectrum2D spectral_pool_truncate(const ComplexSpectrum2D& spectrum,
                                         TruncationSpec spec);

/// Arithmetic mean of all samples.
double gap_spatial(const RealSignal2D& signal);

/// Re(X[0,0]) / (rows * cols). Throws DomainError if the DC bin carries an
/// imaginary part above 1e-10 * max(1, |X[0,0]|).
double gap_spectral(const ComplexSpectrum2D& spectrum);

}  // namespace freqcnn
