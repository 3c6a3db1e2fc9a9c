#include "freqcnn/conv.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "freqcnn/dft.hpp"
#include "freqcnn/errors.hpp"
#include "complex_mul.hpp"

namespace freqcnn {

namespace {

AxisPlan make_axis(std::size_t input_len, std::size_t kernel_len) {
  if (input_len == 0 || kernel_len == 0) {
    throw LengthError("convolution operands must be non-empty");
  }
  const std::size_t full = input_len + kernel_len - 1;
  return {input_len, kernel_len, next_power_of_two(full)};
}

void require_match(const AxisPlan& axis, std::size_t input_len, std::size_t kernel_len,
                   const char* what) {
  if (axis.input_len != input_len || axis.kernel_len != kernel_len) {
    throw LengthError(std::string(what) + ": plan built for lengths (" +
                      std::to_string(axis.input_len) + ", " + std::to_string(axis.kernel_len) +
                      ") but got (" + std::to_string(input_len) + ", " +
                      std::to_string(kernel_len) + ")");
  }
}

std::size_t same_offset(std::size_t kernel_len) { return (kernel_len - 1) / 2; }

// Sums term(0..count-1) pairing term(t) with term(count-1-t). Swapping the
// operands of a convolution reverses its term sequence, so this order makes
// the direct routines bit-for-bit commutative.
template <typename Term>
double symmetric_sum(std::size_t count, Term term) {
  double acc = 0.0;
  std::size_t lo = 0;
  std::size_t hi = count - 1;
  for (; lo < hi; ++lo, --hi) acc += term(lo) + term(hi);
  if (lo == hi) acc += term(lo);
  return acc;
}

}  // namespace

ConvPlan ConvPlan::make(std::size_t input_len, std::size_t kernel_len, ConvMode mode) {
  const AxisPlan axis = make_axis(input_len, kernel_len);
  return ConvPlan(AxisPlan{1, 1, 1}, axis, mode, false);
}

ConvPlan ConvPlan::make_2d(std::size_t input_rows, std::size_t input_cols,
                           std::size_t kernel_rows, std::size_t kernel_cols, ConvMode mode) {
  return ConvPlan(make_axis(input_rows, kernel_rows), make_axis(input_cols, kernel_cols), mode,
                  true);
}

RealSignal1D conv_direct_1d(const RealSignal1D& f, const RealSignal1D& g) {
  const std::size_t n = f.size();
  const std::size_t m = g.size();
  std::vector<double> out(n + m - 1, 0.0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::size_t j_lo = k >= m - 1 ? k - (m - 1) : 0;
    const std::size_t j_hi = std::min(k, n - 1);
    out[k] = symmetric_sum(j_hi - j_lo + 1, [&](std::size_t t) {
      const std::size_t j = j_lo + t;
      return f[j] * g[k - j];
    });
  }
  return RealSignal1D(std::move(out), f.spacing(), f.origin() + g.origin());
}

RealSignal1D trim_same(const RealSignal1D& full, std::size_t input_len,
                       std::size_t kernel_len) {
  if (full.size() != input_len + kernel_len - 1) {
    throw LengthError("trim_same: full output length does not match n + m - 1");
  }
  const std::size_t start = same_offset(kernel_len);
  std::vector<double> out(full.samples().begin() + static_cast<std::ptrdiff_t>(start),
                          full.samples().begin() + static_cast<std::ptrdiff_t>(start + input_len));
  return RealSignal1D(std::move(out), full.spacing(),
                      full.origin() + static_cast<double>(start) * full.spacing());
}

RealSignal1D conv_spectral_1d(const RealSignal1D& f, const RealSignal1D& g,
                              const ConvPlan& plan) {
  if (plan.is_2d()) throw LengthError("conv_spectral_1d: got a 2D plan");
  const AxisPlan& axis = plan.cols();
  require_match(axis, f.size(), g.size(), "conv_spectral_1d");

  std::vector<Complex> fa(axis.padded_len, Complex{});
  std::vector<Complex> ga(axis.padded_len, Complex{});
  std::copy(f.samples().begin(), f.samples().end(), fa.begin());
  std::copy(g.samples().begin(), g.samples().end(), ga.begin());
  fft_inplace(fa, Direction::Forward);
  fft_inplace(ga, Direction::Forward);
  for (std::size_t j = 0; j < fa.size(); ++j) fa[j] = detail::cmul(fa[j], ga[j]);
  fft_inplace(fa, Direction::Inverse);

  std::vector<double> full(axis.full_len());
  for (std::size_t k = 0; k < full.size(); ++k) full[k] = fa[k].real();
  RealSignal1D out(std::move(full), f.spacing(), f.origin() + g.origin());
  if (plan.mode() == ConvMode::Same) return trim_same(out, f.size(), g.size());
  return out;
}

RealSignal2D conv_direct_2d(const RealSignal2D& f, const RealSignal2D& g) {
  const std::size_t fh = f.rows(), fw = f.cols();
  const std::size_t gh = g.rows(), gw = g.cols();
  const std::size_t oh = fh + gh - 1, ow = fw + gw - 1;
  std::vector<double> out(oh * ow, 0.0);
  for (std::size_t y = 0; y < oh; ++y) {
    const std::size_t r_lo = y >= gh - 1 ? y - (gh - 1) : 0;
    const std::size_t r_hi = std::min(y, fh - 1);
    for (std::size_t x = 0; x < ow; ++x) {
      const std::size_t c_lo = x >= gw - 1 ? x - (gw - 1) : 0;
      const std::size_t c_hi = std::min(x, fw - 1);
      const std::size_t span_c = c_hi - c_lo + 1;
      out[y * ow + x] = symmetric_sum((r_hi - r_lo + 1) * span_c, [&](std::size_t t) {
        const std::size_t r = r_lo + t / span_c;
        const std::size_t c = c_lo + t % span_c;
        return f.at(r, c) * g.at(y - r, x - c);
      });
    }
  }
  return RealSignal2D(oh, ow, std::move(out), f.dy(), f.dx());
}

RealSignal2D trim_same(const RealSignal2D& full, std::size_t input_rows,
                       std::size_t input_cols, std::size_t kernel_rows,
                       std::size_t kernel_cols) {
  if (full.rows() != input_rows + kernel_rows - 1 ||
      full.cols() != input_cols + kernel_cols - 1) {
    throw LengthError("trim_same: full output dims do not match n + m - 1");
  }
  const std::size_t r0 = same_offset(kernel_rows);
  const std::size_t c0 = same_offset(kernel_cols);
  std::vector<double> out(input_rows * input_cols);
  for (std::size_t r = 0; r < input_rows; ++r) {
    for (std::size_t c = 0; c < input_cols; ++c) {
      out[r * input_cols + c] = full.at(r0 + r, c0 + c);
    }
  }
  return RealSignal2D(input_rows, input_cols, std::move(out), full.dy(), full.dx());
}

RealSignal2D conv_spectral_2d(const RealSignal2D& f, const RealSignal2D& g,
                              const ConvPlan& plan) {
  if (!plan.is_2d()) throw LengthError("conv_spectral_2d: got a 1D plan");
  require_match(plan.rows(), f.rows(), g.rows(), "conv_spectral_2d rows");
  require_match(plan.cols(), f.cols(), g.cols(), "conv_spectral_2d cols");

  const std::size_t ph = plan.rows().padded_len;
  const std::size_t pw = plan.cols().padded_len;
  auto padded = [&](const RealSignal2D& s) {
    std::vector<double> grid(ph * pw, 0.0);
    for (std::size_t r = 0; r < s.rows(); ++r) {
      for (std::size_t c = 0; c < s.cols(); ++c) grid[r * pw + c] = s.at(r, c);
    }
    return dft_2d(RealSignal2D(ph, pw, std::move(grid)));
  };
  const ComplexSpectrum2D fs = padded(f);
  const ComplexSpectrum2D gs = padded(g);

  std::vector<Complex> product(ph * pw);
  for (std::size_t i = 0; i < product.size(); ++i) product[i] = detail::cmul(fs.data()[i], gs.data()[i]);
  const RealSignal2D circular = idft_2d(ComplexSpectrum2D(ph, pw, std::move(product)));

  const std::size_t oh = plan.rows().full_len();
  const std::size_t ow = plan.cols().full_len();
  std::vector<double> full(oh * ow);
  for (std::size_t r = 0; r < oh; ++r) {
    for (std::size_t c = 0; c < ow; ++c) full[r * ow + c] = circular.at(r, c);
  }
  RealSignal2D out(oh, ow, std::move(full), f.dy(), f.dx());
  if (plan.mode() == ConvMode::Same) {
    return trim_same(out, f.rows(), f.cols(), g.rows(), g.cols());
  }
  return out;
}

ComplexSpectrum1D pointwise_product_grad(const ComplexSpectrum1D& upstream,
                                         const ComplexSpectrum1D& other_factor) {
  if (upstream.size() != other_factor.size()) {
    throw LengthError("pointwise_product_grad: length mismatch " +
                      std::to_string(upstream.size()) + " vs " +
                      std::to_string(other_factor.size()));
  }
  std::vector<Complex> out(upstream.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = upstream[j] * other_factor[j];
  return ComplexSpectrum1D(std::move(out));
}

}  // namespace freqcnn
