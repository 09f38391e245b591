#ifndef MTSPACE_ERRORS_HPP
#define MTSPACE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mts {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text (sentences, value sets, theory or family files).
/// `position` is a 0-based byte offset into the offending input.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Signature mismatches: unknown predicate, wrong signature for an
/// operation, inclusion violations.
class SignatureError : public Error {
public:
  using Error::Error;
};

/// A resource guard refused the computation; the message reports the budget.
class BudgetError : public Error {
public:
  using Error::Error;
};

/// An operation's precondition does not hold for the given arguments.
class PreconditionError : public Error {
public:
  using Error::Error;
};

} // namespace mts

#endif
