#include "freqcnn/signal.hpp"

#include <cmath>
#include <string>

#include "freqcnn/errors.hpp"

namespace freqcnn {

namespace {

void require_positive_spacing(double spacing, const char* what) {
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw DomainError(std::string(what) + " must be finite and strictly positive");
  }
}

template <typename T>
void require_all_finite(const std::vector<T>& values, const char* what) {
  for (const auto& v : values) require_finite(v, what);
}

}  // namespace

RealSignal1D::RealSignal1D(std::vector<double> samples, double spacing, double origin)
    : samples_(std::move(samples)), spacing_(spacing), origin_(origin) {
  if (samples_.empty()) throw LengthError("RealSignal1D requires at least one sample");
  require_positive_spacing(spacing_, "RealSignal1D spacing");
  require_finite(origin_, "RealSignal1D origin");
  require_all_finite(samples_, "RealSignal1D sample");
}

ComplexSpectrum1D::ComplexSpectrum1D(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw LengthError("ComplexSpectrum1D requires at least one coefficient");
  require_all_finite(coeffs_, "ComplexSpectrum1D coefficient");
}

RealSignal2D::RealSignal2D(std::size_t rows, std::size_t cols, std::vector<double> data,
                           double dy, double dx)
    : rows_(rows), cols_(cols), data_(std::move(data)), dy_(dy), dx_(dx) {
  if (rows_ == 0 || cols_ == 0) throw LengthError("RealSignal2D requires H*W > 0");
  if (data_.size() != rows_ * cols_) {
    throw LengthError("RealSignal2D data size " + std::to_string(data_.size()) +
                      " does not match " + std::to_string(rows_) + "x" +
                      std::to_string(cols_));
  }
  require_positive_spacing(dy_, "RealSignal2D dy");
  require_positive_spacing(dx_, "RealSignal2D dx");
  require_all_finite(data_, "RealSignal2D sample");
}

ComplexSpectrum2D::ComplexSpectrum2D(std::size_t rows, std::size_t cols,
                                     std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows_ == 0 || cols_ == 0) throw LengthError("ComplexSpectrum2D requires H*W > 0");
  if (data_.size() != rows_ * cols_) {
    throw LengthError("ComplexSpectrum2D data size " + std::to_string(data_.size()) +
                      " does not match " + std::to_string(rows_) + "x" +
                      std::to_string(cols_));
  }
  require_all_finite(data_, "ComplexSpectrum2D coefficient");
}

}  // namespace freqcnn
