#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace freqcnn {

/// The library's single complex primitive.
using Complex = std::complex<double>;

/// Two independently computed sides of an identity.
struct IdentitySides {
  double lhs;
  double rhs;
};

/// Uniformly sampled real signal on the grid origin + k * spacing.
class RealSignal1D {
 public:
  explicit RealSignal1D(std::vector<double> samples, double spacing = 1.0,
                        double origin = 0.0);

  std::size_t size() const noexcept { return samples_.size(); }
  double spacing() const noexcept { return spacing_; }
  double origin() const noexcept { return origin_; }
  std::span<const double> samples() const noexcept { return samples_; }
  double operator[](std::size_t k) const { return samples_[k]; }

  /// Length of the periodic domain, size() * spacing().
  double domain_length() const noexcept {
    return static_cast<double>(samples_.size()) * spacing_;
  }

 private:
  std::vector<double> samples_;
  double spacing_;
  double origin_;
};

/// Complex coefficients in standard DFT order: index j holds frequency j for
/// j < n/2 and frequency j - n otherwise. Index n/2 (even n) is the Nyquist bin.
class ComplexSpectrum1D {
 public:
  explicit ComplexSpectrum1D(std::vector<Complex> coeffs);

  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  const Complex& operator[](std::size_t j) const { return coeffs_[j]; }

 private:
  std::vector<Complex> coeffs_;
};

/// Row-major H x W real grid. Rows run along y, columns along x.
class RealSignal2D {
 public:
  RealSignal2D(std::size_t rows, std::size_t cols, std::vector<double> data,
               double dy = 1.0, double dx = 1.0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double dy() const noexcept { return dy_; }
  double dx() const noexcept { return dx_; }
  std::span<const double> data() const noexcept { return data_; }
  double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  double dy_;
  double dx_;
};

/// Row-major H x W complex grid, standard DFT order along each axis.
class ComplexSpectrum2D {
 public:
  ComplexSpectrum2D(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const Complex> data() const noexcept { return data_; }
  const Complex& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

/// Signed frequency index of bin j in an n-point standard-order spectrum.
constexpr long signed_frequency(std::size_t j, std::size_t n) noexcept {
  return j < (n + 1) / 2 ? static_cast<long>(j)
                         : static_cast<long>(j) - static_cast<long>(n);
}

constexpr bool is_power_of_two(std::size_t n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}

constexpr std::size_t next_power_of_two(std::size_t n) noexcept {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace freqcnn
