#pragma once

// Text formats at the user boundary. Everything here is 1-based.
//
//   permutation   "(1 2 3)(4 5)"   identity "()"   fixed points may be written "(4)"
//   partition     "(3,2)"
//   set partition "{{1,2,3},{4,5}}"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kraus_symm/permutation.hpp"

namespace kraus_symm {

/// Parses cycle notation. Without `degree` the degree is the largest index
/// mentioned, so "()" needs an explicit degree. Throws InvalidArgument on
/// malformed text, repeated indices, or an index beyond `degree`.
Permutation parse_cycles(std::string_view text, std::optional<std::size_t> degree = std::nullopt);

/// Largest index mentioned in the text (0 for "()"). Throws like parse_cycles.
std::size_t max_cycle_index(std::string_view text);

/// Nontrivial cycles only, each starting at its smallest index, ordered by
/// that index. The identity prints as "()".
std::string format_cycles(const Permutation& p);

std::string format_partition(const IntegerPartition& mu);
std::string format_set_partition(const SetPartition& blocks);

}  // namespace kraus_symm
