#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hrl {

/// Input outside an operation's domain (zero polynomial where nonzero is
/// required, both gcd arguments zero, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller broke a documented precondition (e.g. non-squarefree input to a
/// Sturm sequence).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A recurrence pair or spec that the criterion does not accept.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric step that had to converge did not.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hrl
