#pragma once

#include <stdexcept>
#include <string>

namespace phasekit {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A type or config invariant was violated. Message names the first
// violated invariant ("a must be positive", ...).
struct ValidationError : Error {
  using Error::Error;
};

// An argument left the domain of an operation (surface evaluated at a
// negative offset, scaled training fraction out of range, ...).
struct DomainError : Error {
  using Error::Error;
};

// Derivative requested exactly at a kink. Carries both one-sided values
// so callers can pick a convention instead of re-deriving them.
struct NonDifferentiableError : Error {
  double left;
  double right;
  NonDifferentiableError(const std::string& what, double left_value, double right_value)
      : Error(what), left(left_value), right(right_value) {}
};

// Adaptive quadrature hit max depth without reaching tolerance.
struct QuadratureError : Error {
  using Error::Error;
};

// Internal numeric consistency check failed (non-finite objective,
// violated ordering that the math guarantees, ...).
struct NumericalError : Error {
  using Error::Error;
};

// Exhaustive enumeration would exceed the size budget.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace phasekit
