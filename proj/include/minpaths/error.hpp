#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minpaths {

/// Base class for every error raised by the library. The CLI maps all of
/// these to the "domain/validation" exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph text. `line()` is 1-based; 0 when the input ended early.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvalidPathError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (bad vertex, r >= r_tot, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A structural precondition of the input graph does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration refused because the instance exceeds the guard.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace minpaths
