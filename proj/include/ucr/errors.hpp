#pragma once

#include <stdexcept>
#include <string>

namespace ucr {

/// Parameter outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Base class for failures of a numerical procedure on valid input.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A series did not reach its truncation criterion within the term budget.
class NonConvergence : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// The zero scan reached its upper bound before finding the requested count.
class ScanExhausted : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Bisection could not shrink a bracket; the zero may be multiple.
class SuspectedDoubleRoot : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// A ratio denominator vanished numerically (too close to a derivative zero).
class NearCriticalPoint : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// A root bracket does not show the expected sign change.
class NonBracketing : public NumericalError {
public:
  using NumericalError::NumericalError;
};

}  // namespace ucr
