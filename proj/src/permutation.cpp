#include "kraus_symm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "kraus_symm/errors.hpp"

namespace kraus_symm {

Permutation::Permutation(std::vector<Index> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Index v : images_) {
    if (v >= images_.size()) {
      throw InvalidArgument("permutation image " + std::to_string(v) + " out of range for degree " +
                            std::to_string(images_.size()));
    }
    if (seen[v]) throw InvalidArgument("permutation image " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Index> images(n);
  std::iota(images.begin(), images.end(), Index{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<Index>>& cycles) {
  std::vector<Index> images(n);
  std::iota(images.begin(), images.end(), Index{0});
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Index from = cycle[k];
      if (from >= n) {
        throw InvalidArgument("cycle index " + std::to_string(from + 1) + " exceeds degree " +
                              std::to_string(n));
      }
      if (used[from]) throw InvalidArgument("index " + std::to_string(from + 1) + " repeated in cycles");
      used[from] = true;
      images[from] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (images_[j] != j) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) inv.images_[images_[j]] = static_cast<Index>(j);
  return inv;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DimensionMismatch("cannot compose permutations of degree " + std::to_string(p.degree()) +
                            " and " + std::to_string(q.degree()));
  }
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t j = 0; j < q.degree(); ++j) r.images_[j] = p.images_[q.images_[j]];
  return r;
}

Permutation conjugate(const Permutation& p, const Permutation& tau) { return tau * p * tau.inverse(); }

// --- cycles and partitions -------------------------------------------------

CycleDecomposition::CycleDecomposition(std::size_t degree, std::vector<std::vector<Index>> cycles)
    : degree_(degree), cycles_(std::move(cycles)) {
  std::vector<bool> covered(degree_, false);
  std::size_t count = 0;
  for (const auto& c : cycles_) {
    if (c.empty()) throw InvalidArgument("empty cycle");
    for (Index i : c) {
      if (i >= degree_ || covered[i]) throw InvalidArgument("cycles are not a disjoint cover");
      covered[i] = true;
      ++count;
    }
  }
  if (count != degree_) throw InvalidArgument("cycles do not cover every index");
}

std::vector<std::size_t> CycleDecomposition::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(cycles_.size());
  for (const auto& c : cycles_) out.push_back(c.size());
  return out;
}

Permutation CycleDecomposition::recompose() const { return Permutation::from_cycles(degree_, cycles_); }

CycleDecomposition cycle_decomposition(const Permutation& p) {
  const std::size_t n = p.degree();
  std::vector<bool> visited(n, false);
  std::vector<std::vector<Index>> cycles;
  for (Index start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<Index> cycle;
    for (Index j = start; !visited[j]; j = p(j)) {
      visited[j] = true;
      cycle.push_back(j);
    }
    cycles.push_back(std::move(cycle));
  }
  // Starting points were visited in increasing order, so each cycle already
  // begins at its minimum and a stable sort keeps ties ordered by it.
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return CycleDecomposition(n, std::move(cycles));
}

IntegerPartition::IntegerPartition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be nonincreasing");
  }
}

IntegerPartition IntegerPartition::from_unsorted(std::vector<std::size_t> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return IntegerPartition(std::move(parts));
}

std::size_t IntegerPartition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

namespace {

void partitions_rec(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& current,
                    std::vector<IntegerPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<IntegerPartition> integer_partitions(std::size_t n) {
  std::vector<IntegerPartition> out;
  std::vector<std::size_t> current;
  partitions_rec(n, n, current, out);
  return out;
}

IntegerPartition partition_of(const Permutation& p) { return IntegerPartition(cycle_decomposition(p).lengths()); }

std::uint64_t order(const Permutation& p) {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_decomposition(p).lengths()) result = std::lcm(result, std::uint64_t{len});
  return result;
}

bool are_conjugate(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DimensionMismatch("are_conjugate: degrees " + std::to_string(p.degree()) + " and " +
                            std::to_string(q.degree()) + " differ");
  }
  return partition_of(p) == partition_of(q);
}

Permutation canonical_cycle_representative(const IntegerPartition& mu) {
  std::vector<std::vector<Index>> cycles;
  Index next = 0;
  for (std::size_t len : mu.parts()) {
    std::vector<Index> cycle(len);
    std::iota(cycle.begin(), cycle.end(), next);
    next += static_cast<Index>(len);
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(mu.total(), cycles);
}

// --- defining representation -----------------------------------------------

std::vector<double> PermutationMatrix::conjugate_diagonal(std::span<const double> diagonal) const {
  if (diagonal.size() != dimension()) {
    throw DimensionMismatch("diagonal of size " + std::to_string(diagonal.size()) +
                            " does not match permutation degree " + std::to_string(dimension()));
  }
  std::vector<double> out(diagonal.size());
  for (std::size_t j = 0; j < diagonal.size(); ++j) out[perm_(static_cast<Index>(j))] = diagonal[j];
  return out;
}

Eigen::MatrixXd PermutationMatrix::dense() const {
  const auto n = static_cast<Eigen::Index>(dimension());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m(perm_(static_cast<Index>(j)), j) = 1.0;
  return m;
}

PermutationMatrix defining_matrix(const Permutation& p) { return PermutationMatrix(p); }

// --- set partitions and subgroups --------------------------------------------

SetPartition::SetPartition(std::size_t degree, std::vector<std::vector<Index>> blocks)
    : degree_(degree), blocks_(std::move(blocks)), block_index_(degree, degree) {
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidArgument("set partition has an empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    for (Index i : blocks_[k]) {
      if (i >= degree_ || block_index_[i] != degree_) throw InvalidArgument("blocks are not a disjoint cover");
      block_index_[i] = k;
    }
  }
  for (std::size_t idx : block_index_) {
    if (idx == degree_) throw InvalidArgument("blocks do not cover every index");
  }
}

bool Subgroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

Subgroup Subgroup::conjugated_by(const Permutation& tau) const {
  if (tau.degree() != degree_) throw DimensionMismatch("conjugating permutation has the wrong degree");
  std::vector<Permutation> elems;
  elems.reserve(elements_.size());
  for (const auto& e : elements_) elems.push_back(conjugate(e, tau));
  std::vector<Permutation> gens;
  for (const auto& g : generators_) gens.push_back(conjugate(g, tau));
  std::sort(elems.begin(), elems.end());
  Subgroup out;
  out.degree_ = degree_;
  out.elements_ = std::move(elems);
  out.generators_ = std::move(gens);
  return out;
}

Subgroup generate_subgroup(const std::vector<Permutation>& gens, std::size_t n, std::size_t cap) {
  for (const auto& g : gens) {
    if (g.degree() != n) {
      throw DimensionMismatch("generator of degree " + std::to_string(g.degree()) +
                              " in a subgroup of degree " + std::to_string(n));
    }
  }
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  // Left-multiplying by generators from the identity reaches every word in
  // the generators; in a finite group that is the whole generated subgroup.
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Permutation y = g * x;
        if (seen.insert(y).second) {
          if (seen.size() > cap) {
            throw SizeLimitExceeded("subgroup closure exceeds " + std::to_string(cap) + " elements");
          }
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  Subgroup s;
  s.degree_ = n;
  s.elements_.assign(seen.begin(), seen.end());
  s.generators_ = gens;
  return s;
}

Subgroup cyclic_subgroup(const Permutation& p) { return generate_subgroup({p}, p.degree()); }

Subgroup subgroup_from_elements(std::size_t n, std::vector<Permutation> elements,
                                std::vector<Permutation> generators) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto has = [&](const Permutation& p) { return std::binary_search(elements.begin(), elements.end(), p); };
  for (const auto& e : elements) {
    if (e.degree() != n) throw DimensionMismatch("element degree differs from subgroup degree");
  }
  if (!has(Permutation::identity(n))) throw InvalidArgument("element list lacks the identity");
  for (const auto& a : elements) {
    if (!has(a.inverse())) throw InvalidArgument("element list is not closed under inverses");
    for (const auto& b : elements) {
      if (!has(a * b)) throw InvalidArgument("element list is not closed under composition");
    }
  }
  Subgroup s;
  s.degree_ = n;
  s.elements_ = std::move(elements);
  s.generators_ = std::move(generators);
  return s;
}

SetPartition orbit_partition(const Subgroup& s) {
  const std::size_t n = s.degree();
  // The orbit of i is {g(i) : g ∈ S}.
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<Index>> blocks;
  for (Index i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    std::vector<Index> block;
    for (const auto& g : s.elements()) {
      Index j = g(i);
      if (!assigned[j]) {
        assigned[j] = true;
        block.push_back(j);
      }
    }
    blocks.push_back(std::move(block));
  }
  return SetPartition(n, std::move(blocks));
}

Permutation cycle_through_blocks(const SetPartition& blocks) {
  return Permutation::from_cycles(blocks.degree(), blocks.blocks());
}

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit,
                          std::size_t degree_cap) {
  check_enumeration_degree(n, degree_cap);
  std::vector<Index> images(n);
  std::iota(images.begin(), images.end(), Index{0});
  do {
    visit(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace kraus_symm
