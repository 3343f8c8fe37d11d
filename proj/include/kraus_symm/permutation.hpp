#pragma once

// Combinatorics of the symmetric group Σn: permutations, cycle structure,
// integer partitions, the defining (permutation matrix) representation and
// small subgroups given by generators.
//
// Indices are 0-based throughout this header. The 1-based convention of the
// cycle notation lives in cycle_notation.hpp.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "kraus_symm/limits.hpp"

namespace kraus_symm {

using Index = std::uint32_t;

/// A bijection of {0, ..., n-1}; `p(j)` is the image of j.
class Permutation {
 public:
  /// Identity of degree 0. Mostly useful as a placeholder.
  Permutation() = default;

  /// Validates that `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Index> images);

  static Permutation identity(std::size_t n);

  /// Builds from disjoint 0-based cycles; indices not mentioned are fixed.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<Index>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Index operator()(Index j) const { return images_[j]; }
  std::span<const Index> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// p^k for any integer k, negative powers included.
  Permutation pow(long long k) const;

  /// Composition (p * q)(j) = p(q(j)), so that R_p R_q = R_{p*q}.
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Index> images_;
};

/// τ p τ^{-1}.
Permutation conjugate(const Permutation& p, const Permutation& tau);

/// Disjoint cycles covering every index, fixed points as length-1 cycles.
/// Each cycle starts at its smallest index and follows p. Cycles are sorted by
/// nonincreasing length, ties broken by smallest element.
class CycleDecomposition {
 public:
  CycleDecomposition(std::size_t degree, std::vector<std::vector<Index>> cycles);

  std::size_t degree() const { return degree_; }
  const std::vector<std::vector<Index>>& cycles() const { return cycles_; }
  std::size_t size() const { return cycles_.size(); }
  std::vector<std::size_t> lengths() const;

  /// The permutation sending each cycle entry to its successor.
  Permutation recompose() const;

 private:
  std::size_t degree_;
  std::vector<std::vector<Index>> cycles_;
};

/// Nonincreasing positive parts.
class IntegerPartition {
 public:
  /// Rejects zero parts and increasing sequences.
  explicit IntegerPartition(std::vector<std::size_t> parts);

  /// Sorts the parts first; still rejects zeros.
  static IntegerPartition from_unsorted(std::vector<std::size_t> parts);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  std::size_t total() const;

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
  friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;

 private:
  std::vector<std::size_t> parts_;
};

/// All partitions of n in reverse lexicographic order, starting with (n).
std::vector<IntegerPartition> integer_partitions(std::size_t n);

/// R_p with (R_p)_{ij} = 1 iff p(j) = i, held as the index map p.
class PermutationMatrix {
 public:
  explicit PermutationMatrix(Permutation p) : perm_(std::move(p)) {}

  std::size_t dimension() const { return perm_.degree(); }
  const Permutation& permutation() const { return perm_; }

  /// Row of the single unit entry in column j.
  Index row_of(Index column) const { return perm_(column); }
  double entry(Index row, Index column) const { return perm_(column) == row ? 1.0 : 0.0; }

  PermutationMatrix adjoint() const { return PermutationMatrix(perm_.inverse()); }

  /// R_p diag(d) R_p^{-1}; entry p(j) of the result is d[j].
  std::vector<double> conjugate_diagonal(std::span<const double> diagonal) const;

  Eigen::MatrixXd dense() const;

  friend PermutationMatrix operator*(const PermutationMatrix& a, const PermutationMatrix& b) {
    return PermutationMatrix(a.perm_ * b.perm_);
  }

 private:
  Permutation perm_;
};

/// Partition of {0..n-1} into disjoint blocks. Canonical form: each block
/// sorted ascending, blocks ordered by their smallest element.
class SetPartition {
 public:
  SetPartition(std::size_t degree, std::vector<std::vector<Index>> blocks);

  std::size_t degree() const { return degree_; }
  const std::vector<std::vector<Index>>& blocks() const { return blocks_; }
  /// Position of the block containing index i.
  std::size_t block_of(Index i) const { return block_index_[i]; }

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.degree_ == b.degree_ && a.blocks_ == b.blocks_;
  }

 private:
  std::size_t degree_;
  std::vector<std::vector<Index>> blocks_;
  std::vector<std::size_t> block_index_;
};

/// A finite subgroup of Σn held by its full, sorted element list.
class Subgroup {
 public:
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool contains(const Permutation& p) const;

  /// τ S τ^{-1}.
  Subgroup conjugated_by(const Permutation& tau) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  friend Subgroup generate_subgroup(const std::vector<Permutation>&, std::size_t, std::size_t);
  friend Subgroup subgroup_from_elements(std::size_t, std::vector<Permutation>,
                                         std::vector<Permutation>);

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

CycleDecomposition cycle_decomposition(const Permutation& p);
IntegerPartition partition_of(const Permutation& p);

/// LCM of the cycle lengths.
std::uint64_t order(const Permutation& p);

PermutationMatrix defining_matrix(const Permutation& p);

/// Same cycle type. Throws DimensionMismatch on differing degrees.
bool are_conjugate(const Permutation& p, const Permutation& q);

/// (1 .. μ1)(μ1+1 .. μ1+μ2)... in 1-based terms.
Permutation canonical_cycle_representative(const IntegerPartition& mu);

/// Closure of `gens` under composition. Throws SizeLimitExceeded once the
/// closure would grow past `cap` elements, DimensionMismatch if a generator
/// has the wrong degree.
Subgroup generate_subgroup(const std::vector<Permutation>& gens, std::size_t n,
                           std::size_t cap = kDefaultSubgroupCap);

/// ⟨p⟩.
Subgroup cyclic_subgroup(const Permutation& p);

/// Wraps an element list known to be a group. Verifies identity, closure and
/// inverses; throws InvalidArgument otherwise.
Subgroup subgroup_from_elements(std::size_t n, std::vector<Permutation> elements,
                                std::vector<Permutation> generators);

/// Orbits of {0..n-1} under the action of S.
SetPartition orbit_partition(const Subgroup& s);

/// The permutation whose cycles are exactly the blocks of `blocks` (each in
/// ascending order). ⟨result⟩ has the same orbits.
Permutation cycle_through_blocks(const SetPartition& blocks);

/// Calls `visit` for every element of Σn in lexicographic image order.
/// Enforces the degree cap.
void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit,
                          std::size_t degree_cap = max_enumeration_degree());

std::uint64_t factorial(std::size_t n);

}  // namespace kraus_symm
