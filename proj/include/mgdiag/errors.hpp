#ifndef MGDIAG_ERRORS_HPP
#define MGDIAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mgdiag {

/// A documented precondition on the arguments does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polynomials from different rings (variable count, block split or
/// modulus) were combined.
class ContextError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A computation would exceed the desk-scale size guardrail.
class ResourceLimitError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Malformed polynomial text. `position` is a 0-based byte offset.
class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : PreconditionError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Something that should be impossible happened: a search cap was hit or
/// two routes that must agree did not. Always a bug report, never an answer.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mgdiag

#endif  // MGDIAG_ERRORS_HPP
