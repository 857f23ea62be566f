#pragma once

#include <stdexcept>

namespace deko {

// Invalid inputs, broken invariants, mismatched spaces. The CLI maps this
// to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation refused to run because an enumeration guard was exceeded.
// The CLI maps this to exit code 3.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The operation is not defined for the given space kind.
class UnsupportedError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A moment (function) sequence is not realizable by any distribution.
class MomentInfeasibleError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace deko
