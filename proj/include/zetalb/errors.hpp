#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetalb {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A weight function failed one of the admissibility checks.
class InvalidWeight : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Evaluation requested at a pole (s = 1, nonpositive integers for Gamma, ...).
class PoleError : public Error {
 public:
  using Error::Error;
};

/// The formula is undefined for the given parameters (e.g. log log of a value <= e).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A truncation or table size would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t needed)
      : Error(what + " (needed " + std::to_string(needed) + ")"), needed_(needed) {}

  std::uint64_t needed() const noexcept { return needed_; }

 private:
  std::uint64_t needed_;
};

/// Quadrature or series failed to reach its tolerance.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for the polynomial's mode (e.g. convolving shifted polynomials).
class UnsupportedMode : public Error {
 public:
  using Error::Error;
};

/// A check was configured with parameters violating its hypotheses.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace zetalb
