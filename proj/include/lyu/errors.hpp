#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lyu {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was applied outside its mathematical domain
/// (zero or unit ideal, non-squarefree input, index out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two objects built over different variable contexts were combined.
class ContextMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A hard cap (Groebner basis size, resolution rank, Taylor generators) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `position` is the 0-based offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& expected, const std::string& message)
      : Error(message + " at position " + std::to_string(position) + " (expected " + expected + ")"),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace lyu
