#pragma once

#include <cstddef>

#include "freqcnn/signal.hpp"

namespace freqcnn {

/// Output window of a linear convolution.
///  - Full: all n + m - 1 samples.
///  - Same: n samples centred on the full output; when the excess m - 1 is
///    odd the window starts at floor((m - 1) / 2), i.e. biased left.
enum class ConvMode { Full, Same };

/// Padding plan for one axis of a spectral convolution.
struct AxisPlan {
  std::size_t input_len;
  std::size_t kernel_len;
  std::size_t padded_len;  ///< power of two >= input_len + kernel_len - 1

  std::size_t full_len() const noexcept { return input_len + kernel_len - 1; }
};

class ConvPlan {
 public:
  /// 1D plan.
  static ConvPlan make(std::size_t input_len, std::size_t kernel_len,
                       ConvMode mode = ConvMode::Full);
  /// 2D plan, padding each axis independently.
  static ConvPlan make_2d(std::size_t input_rows, std::size_t input_cols,
                          std::size_t kernel_rows, std::size_t kernel_cols,
                          ConvMode mode = ConvMode::Full);

  ConvMode mode() const noexcept { return mode_; }
  const AxisPlan& rows() const noexcept { return rows_; }
  const AxisPlan& cols() const noexcept { return cols_; }
  bool is_2d() const noexcept { return is_2d_; }

 private:
  ConvPlan(AxisPlan rows, AxisPlan cols, ConvMode mode, bool is_2d)
      : rows_(rows), cols_(cols), mode_(mode), is_2d_(is_2d) {}

  AxisPlan rows_;
  AxisPlan cols_;  // 1D plans keep their single axis here
  ConvMode mode_;
  bool is_2d_;
};

/// Nested-loop full linear convolution, out[k] = sum_j f[j] g[k - j].
RealSignal1D conv_direct_1d(const RealSignal1D& f, const RealSignal1D& g);

/// Zero-pad, FFT, pointwise product, inverse FFT, trim to the plan's window.
RealSignal1D conv_spectral_1d(const RealSignal1D& f, const RealSignal1D& g,
                              const ConvPlan& plan);

/// Nested-loop full 2D linear convolution.
RealSignal2D conv_direct_2d(const RealSignal2D& f, const RealSignal2D& g);

RealSignal2D conv_spectral_2d(const RealSignal2D& f, const RealSignal2D& g,
                              const ConvPlan& plan);

/// Extracts the Same-mode window of length n from a full output.
RealSignal1D trim_same(const RealSignal1D& full, std::size_t input_len,
                       std::size_t kernel_len);
RealSignal2D trim_same(const RealSignal2D& full, std::size_t input_rows,
                       std::size_t input_cols, std::size_t kernel_rows,
                       std::size_t kernel_cols);

/// Back-propagation through the pointwise spectral product P = F1 * F2:
/// out[j] = upstream[j] * other_factor[j].
///
/// For a real-valued loss L, take upstream[j] = dL/dRe(P_j) + i dL/dIm(P_j) and
/// pass conj(F2) as other_factor; the result is then dL/dRe(F1_j) + i dL/dIm(F1_j).
ComplexSpectrum1D pointwise_product_grad(const ComplexSpectrum1D& upstream,
                                         const ComplexSpectrum1D& other_factor);

}  // namespace freqcnn
