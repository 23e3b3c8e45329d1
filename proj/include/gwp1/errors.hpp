#pragma once

#include <stdexcept>
#include <string>

namespace gwp1 {

// Base class for all arithmetic/domain failures raised by the engine.
struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Division by a series/number that is identically zero (up to truncation).
struct ZeroDivisorError : AlgebraError {
  using AlgebraError::AlgebraError;
};

// Operand outside the domain of a series operation (exp/log/sqrt preconditions).
struct SeriesDomainError : AlgebraError {
  using AlgebraError::AlgebraError;
};

// A coefficient beyond the stored truncation bound was requested.  Operations
// never return partial data; they raise this instead.
struct TruncationError : AlgebraError {
  using AlgebraError::AlgebraError;
};

// Malformed input (CLI grammar, cache files, unsupported profiles).
struct InputError : AlgebraError {
  using AlgebraError::AlgebraError;
};

}  // namespace gwp1
