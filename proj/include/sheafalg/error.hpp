#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace sheafalg {

/// Malformed input: bad dimensions, unknown ids, schema errors.
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A computation would exceed one of the configured enumeration caps.
class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An internal identity that must hold by construction failed. Indicates a bug.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// The first failing axiom instance found by a validator.
struct Violation {
    std::string axiom;
    std::string detail;

    std::string message() const { return axiom + ": " + detail; }
};

using Validation = std::optional<Violation>;

}  // namespace sheafalg
