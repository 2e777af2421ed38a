#pragma once

#include <stdexcept>
#include <string>

namespace octder {

// Raised when a caller violates a documented precondition (bad field,
// mismatched operands, malformed input). The CLI maps these to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an internal consistency check fails: a product escaping its
// basis span, a nonzero Leibniz residual, a rank-nullity mismatch.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace octder
