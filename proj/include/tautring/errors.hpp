#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tautring {

/// Malformed input that violates a structural precondition (dimension
/// mismatch, index out of range, invalid parameters).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that does not follow the class grammar. `position` is the 0-based
/// character offset where parsing stopped.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured size cap (b!, Gram dimension) would be exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact linear system that was expected to be solvable is not.
class InconsistentSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tautring
