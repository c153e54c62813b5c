#pragma once

#include <stdexcept>
#include <string>

namespace arexit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameter or configuration outside the supported domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A path that violates the start/interior/exit constraints.
class ConstraintViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The map sends some interior grid state outside (-h, h).
class MapNotContained : public DomainError {
 public:
  MapNotContained(double x, double fx, double half_width);

  double x() const noexcept { return x_; }
  double fx() const noexcept { return fx_; }

 private:
  double x_;
  double fx_;
};

/// Numerical failure that is not the caller's fault (e.g. every Monte Carlo
/// trial censored).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace arexit
