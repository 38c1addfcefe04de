#pragma once

#include <stdexcept>
#include <string>

namespace uhqft {

// Bad caller input: dimension mismatch, unknown generator, cap exceeded.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed diagram, algebra, or matrix file. line() is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A structure-constant table that does not determine a consistent algebra,
// e.g. the defining relation of a comultiplication has no unique solution.
class AlgebraInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A graded computation was requested but the differential does not preserve j.
class GradingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uhqft
