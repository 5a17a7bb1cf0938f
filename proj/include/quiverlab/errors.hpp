#pragma once

#include <stdexcept>
#include <string>

namespace quiverlab {

/// Malformed or inconsistent input (bad label, wrong length, broken
/// annihilation constraint, ...). Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A representation type whose slice quiver would need a negative number of
/// arrows or loops. Carries mathematical information, so it is kept distinct
/// from plain validation failures.
class InadmissibleTypeError : public ValidationError {
 public:
  explicit InadmissibleTypeError(const std::string& what) : ValidationError(what) {}
};

/// A state or memory budget was exceeded. Exit code 3.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed (e.g. Weyl divisibility). Exit code 4.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace quiverlab
