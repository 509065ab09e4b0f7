#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nestplan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or CSV input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A vertex triple that is not a 3-clique of the host graph.
class InvalidClique : public Error {
 public:
  using Error::Error;
};

/// A structural guarantee of the decomposition did not hold. Never expected on
/// validated input; signals a bug or a graph that is not maximal planar.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace nestplan
