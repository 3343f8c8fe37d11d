#pragma once

#include <cstddef>

namespace kraus_symm {

/// Default cap on the number of elements produced by subgroup closure.
inline constexpr std::size_t kDefaultSubgroupCap = 10080;

/// Default cap on the degree n for exhaustive walks over all of Σn.
inline constexpr std::size_t kDefaultMaxDegree = 8;

/// Degree cap for exhaustive enumeration. Reads KRAUS_SYMM_MAX_DEGREE when
/// set to a positive integer, otherwise kDefaultMaxDegree.
std::size_t max_enumeration_degree();

/// Throws SizeLimitExceeded when n exceeds `cap`.
void check_enumeration_degree(std::size_t n, std::size_t cap);

}  // namespace kraus_symm
