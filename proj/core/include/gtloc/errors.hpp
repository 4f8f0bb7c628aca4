#pragma once

#include <stdexcept>
#include <string>

namespace gtloc {

/// Raised for malformed or inconsistent on-disk inputs (datasets, galleries,
/// checkpoints). Maps to CLI exit code 3.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a computation produces or would consume non-finite values
/// (diverged training, degenerate compositions). Maps to CLI exit code 4.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gtloc
