#pragma once

#include <stdexcept>
#include <string>

namespace trace_census {

/// Checked integer arithmetic left the representable range. The message
/// names the operation that overflowed.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& op)
      : std::overflow_error("arithmetic overflow in " + op) {}
};

/// Input outside an operation's domain (invalid matrix, bad region, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A period that is an exact power of a shorter word.
class NonPrimitivePeriod : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Floating-point evaluation cannot decide a comparison reliably.
class NumericalInstability : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BoundaryAmbiguity : public NumericalInstability {
 public:
  using NumericalInstability::NumericalInstability;
};

}  // namespace trace_census
