#pragma once

#include <stdexcept>
#include <string>

namespace kraus_symm {

/// Malformed input: invalid permutation images, bad cycle text, negative time.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two objects that must share a degree (or matrix dimension) do not.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured cap.
class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace kraus_symm
