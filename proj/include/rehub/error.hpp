#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rehub {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Corrupt, truncated or mismatched binary file.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameters (k, densities, object sets, orderings).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Vertex or object index outside the valid range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Input data that violates an algorithmic precondition, e.g. a BFS depth
/// beyond the 8-bit distance width or an object without k reachable peers.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace rehub
