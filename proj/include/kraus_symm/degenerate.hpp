#pragma once

// Degenerate spectra: which permutations leave a diagonal state unchanged.
//
// Two notions are kept apart. acts_trivially() is positional: σ must map
// every index into its own equal-value block. is_subpartition() is a
// statement about cycle types only, i.e. it holds up to conjugacy.

#include <cstddef>
#include <vector>

#include "kraus_symm/density.hpp"
#include "kraus_symm/permutation.hpp"

namespace kraus_symm {

inline constexpr double kEqualityTolerance = 1e-12;

/// Eigenvalues grouped into blocks of (numerically) equal value.
struct SpectrumProfile {
  IntegerPartition multiplicity_partition;   // block sizes, nonincreasing
  std::vector<std::vector<Index>> blocks;    // ascending indices, ordered by smallest index
  std::vector<double> values;                // mean value per block, same order as blocks
};

/// Sorts the eigenvalues and joins neighbours that differ by at most `tol`;
/// blocks are the transitive closure of that relation.
SpectrumProfile spectrum_profile(const DiagonalDensity& rho, double tol = kEqualityTolerance);

/// R_σ ρ0 R_σ^{-1} = ρ0 up to `tol`: every cycle of σ stays inside one
/// equal-value block. Throws DimensionMismatch for differing degrees.
bool acts_trivially(const Permutation& sigma, const DiagonalDensity& rho0, double tol = kEqualityTolerance);

/// All σ acting trivially on ρ0, a product of symmetric groups on the blocks.
/// Generated by adjacent transpositions inside each block. Throws
/// SizeLimitExceeded when n exceeds `degree_cap`.
Subgroup stabilizer(const DiagonalDensity& rho0, double tol = kEqualityTolerance,
                    std::size_t degree_cap = max_enumeration_degree());

/// Whether the parts of `mu` can be grouped so that the group sums are
/// exactly the parts of `lambda` (as multisets). Throws InvalidArgument when
/// the totals differ.
bool is_subpartition(const IntegerPartition& mu, const IntegerPartition& lambda);

/// Cycle types having at least one permutation that moves ρ0, in the order
/// of integer_partitions(n). Throws SizeLimitExceeded when n > degree_cap.
std::vector<IntegerPartition> nontrivial_directions(const DiagonalDensity& rho0,
                                                    std::size_t degree_cap = max_enumeration_degree(),
                                                    double tol = kEqualityTolerance);

}  // namespace kraus_symm
