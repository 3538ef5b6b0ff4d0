#pragma once

#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hypgeom {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument hits a pole (gamma at a non-positive integer, c+n = 0, ...).
class PoleError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain (z on the cut, delta outside (0,1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation path needs a non-integer parameter excess but got an integer one.
class UnsupportedParams : public Error {
 public:
  using Error::Error;
};

/// Parameters violate the hypotheses of the construction being requested.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Parameters hit a degenerate case that the construction treats separately.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class DivisionBreakdown : public Error {
 public:
  using Error::Error;
};

/// Error carrying the point at which it occurred.
class PointError : public Error {
 public:
  PointError(const std::string& what, std::complex<double> z)
      : Error(describe(what, z)), point_(z) {}

  std::complex<double> point() const noexcept { return point_; }

 private:
  static std::string describe(const std::string& what, std::complex<double> z) {
    std::ostringstream os;
    os.precision(17);
    os << what << " at z = (" << z.real() << ", " << z.imag() << ")";
    return os.str();
  }

  std::complex<double> point_;
};

class DivisionByZero : public PointError {
 public:
  using PointError::PointError;
};

class NearZeroDerivative : public PointError {
 public:
  using PointError::PointError;
};

/// Evaluation failure on a sampling grid; wraps the original message.
class EvaluationError : public PointError {
 public:
  using PointError::PointError;
};

}  // namespace hypgeom
