#pragma once

#include <stdexcept>

namespace beldec {

// Bad input: malformed files, mass constraint violations, model mismatches.
// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Numeric / runtime failure (zero-probability evidence, blown guards).
// The CLI maps this to exit code 3.
class ComputeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace beldec
