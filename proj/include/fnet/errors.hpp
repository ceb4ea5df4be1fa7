#pragma once

#include <stdexcept>
#include <string>

namespace fnet {

// Bad argument: length mismatch, malformed literal, violated precondition.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Request needs an enumeration larger than the configured caps.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// The d=1 multiplicity model failed an integrality or bound check.  Carries
// the offending quantities in the message; indicates invalid input codes.
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

// A sector was asked to lift along a code its tau-word is not orthogonal to.
class LiftError : public std::runtime_error {
 public:
  explicit LiftError(const std::string& what) : std::runtime_error(what) {}
};

// Pointed modular data with a degenerate bicharacter where a nondegenerate
// one is required.
class DegeneracyError : public std::runtime_error {
 public:
  explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

// Exact-arithmetic misuse: overflow, or division by a value without a
// representable inverse.
class ArithmeticError : public std::runtime_error {
 public:
  explicit ArithmeticError(const std::string& what) : std::runtime_error(what) {}
};

// A consistency check that can only fail on a library bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fnet
