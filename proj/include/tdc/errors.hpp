#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tdc {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// finite_field
class NonPrimeError : public Error {
 public:
  using Error::Error;
};
class OverflowError : public Error {
 public:
  using Error::Error;
};
class ZeroInverseError : public Error {
 public:
  using Error::Error;
};
class MixedFieldsError : public Error {
 public:
  using Error::Error;
};

// code_matrix / simulator
class IndexError : public Error {
 public:
  using Error::Error;
};
class EmptySetError : public Error {
 public:
  using Error::Error;
};
class InvalidParamsError : public Error {
 public:
  using Error::Error;
};
class InvalidDistributionError : public Error {
 public:
  using Error::Error;
};

/// Thrown when an exhaustive scan would exceed the configured operation budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& msg, double required)
      : Error(msg), required_ops(required) {}
  double required_ops;
};

// ks_construction
class NotPrimePowerError : public Error {
 public:
  using Error::Error;
};
class NoValidStrengthError : public Error {
 public:
  using Error::Error;
};
class MemoryBudgetError : public Error {
 public:
  using Error::Error;
};

// rate_bounds
class RangeError : public Error {
 public:
  using Error::Error;
};
class InvalidTauError : public Error {
 public:
  using Error::Error;
};
class ObjectiveDomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed code file; `line` is 1-based.
class FormatError : public Error {
 public:
  FormatError(const std::string& msg, int line_no) : Error(msg), line(line_no) {}
  int line;
};

}  // namespace tdc
