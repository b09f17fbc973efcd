#pragma once

#include <stdexcept>
#include <string>

namespace toricdef {

/// Malformed or out-of-contract user input (bad cone, bad flags, bad JSON).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The cone has no canonical degree pairing to one with every ray.
struct NotGorensteinError : InputError {
  using InputError::InputError;
};

/// A table cochain was evaluated outside the tuples it stores.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation needs a representation the operand does not have.
struct UnsupportedRepresentation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured resource cap (e.g. the arity cap) was exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

/// A structure map lies outside the family an operation supports.
struct UnsupportedStructure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A structure map fails the axioms it is required to satisfy.
struct InvalidStructure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal cross-check disagreed; the result cannot be trusted.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

}  // namespace toricdef
