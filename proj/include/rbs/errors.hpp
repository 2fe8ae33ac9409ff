#pragma once

#include <stdexcept>
#include <string>

namespace rbs {

// Thrown when a balanced vector cannot be pulled back through the
// redistribution construction (no in-range preimage exists).
class NotInvertibleError : public std::domain_error {
 public:
  explicit NotInvertibleError(const std::string& what)
      : std::domain_error(what) {}
};

// Thrown when a radial density descriptor fails validation (does not
// integrate to 1, or is negative on [0, 1]).
class InvalidDensityError : public std::invalid_argument {
 public:
  explicit InvalidDensityError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Thrown by the CSV reader; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace rbs
