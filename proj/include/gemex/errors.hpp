#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gemex {

// Invalid argument values (bad family parameters, malformed rotation specs, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size cap was exceeded (vertex count over 64, oracle pattern too large, ...).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed serialized input; `offset` is the byte where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// An iterative solver ran out of iterations; carries the last residual seen.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Input graph does not have the structure an operation requires.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gemex
