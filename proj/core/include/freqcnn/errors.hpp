#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace freqcnn {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Signal or spectrum length/shape does not satisfy an operation's precondition.
class LengthError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Division by a vanishing quantity (e.g. omega = 0 in a 1/(-i omega) factor).
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Inverse transform of a spectrum that did not come from a real signal.
class NonRealSpectrumError : public Error {
 public:
  NonRealSpectrumError(const std::string& what, double residue)
      : Error(what), residue_(residue) {}
  double residue() const noexcept { return residue_; }

 private:
  double residue_;
};

/// An iterative evaluation (quadrature, series) hit its cap before converging.
/// Carries the last estimate so callers can still inspect it.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> last_estimate)
      : Error(what), last_estimate_(last_estimate) {}
  std::complex<double> last_estimate() const noexcept { return last_estimate_; }

 private:
  std::complex<double> last_estimate_;
};

/// Laplace integral truncated at a horizon where the tail is not negligible.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double suggested_horizon)
      : Error(what), suggested_horizon_(suggested_horizon) {}
  double suggested_horizon() const noexcept { return suggested_horizon_; }

 private:
  double suggested_horizon_;
};

/// Throws DomainError naming `what` when `value` is NaN or infinite.
void require_finite(double value, const char* what);
void require_finite(std::complex<double> value, const char* what);

}  // namespace freqcnn
