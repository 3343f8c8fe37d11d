#include "kraus_symm/degenerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "kraus_symm/errors.hpp"

namespace kraus_symm {

SpectrumProfile spectrum_profile(const DiagonalDensity& rho, double tol) {
  const std::size_t n = rho.size();
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return rho[a] < rho[b]; });

  std::vector<std::vector<Index>> blocks;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0 || rho[order[k]] - rho[order[k - 1]] > tol) blocks.emplace_back();
    blocks.back().push_back(order[k]);
  }
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<std::size_t> sizes;
  std::vector<double> values;
  for (const auto& b : blocks) {
    sizes.push_back(b.size());
    double sum = 0.0;
    for (Index i : b) sum += rho[i];
    values.push_back(sum / static_cast<double>(b.size()));
  }
  return {IntegerPartition::from_unsorted(std::move(sizes)), std::move(blocks), std::move(values)};
}

namespace {

std::vector<std::size_t> block_labels(const SpectrumProfile& profile, std::size_t n) {
  std::vector<std::size_t> label(n);
  for (std::size_t b = 0; b < profile.blocks.size(); ++b) {
    for (Index i : profile.blocks[b]) label[i] = b;
  }
  return label;
}

bool preserves_blocks(const Permutation& sigma, const std::vector<std::size_t>& label) {
  for (Index j = 0; j < sigma.degree(); ++j) {
    if (label[j] != label[sigma(j)]) return false;
  }
  return true;
}

}  // namespace

bool acts_trivially(const Permutation& sigma, const DiagonalDensity& rho0, double tol) {
  if (sigma.degree() != rho0.size()) {
    throw DimensionMismatch("permutation of degree " + std::to_string(sigma.degree()) + " acting on a state of dimension " +
                            std::to_string(rho0.size()));
  }
  return preserves_blocks(sigma, block_labels(spectrum_profile(rho0, tol), rho0.size()));
}

Subgroup stabilizer(const DiagonalDensity& rho0, double tol, std::size_t degree_cap) {
  const std::size_t n = rho0.size();
  check_enumeration_degree(n, degree_cap);
  const SpectrumProfile profile = spectrum_profile(rho0, tol);
  const auto label = block_labels(profile, n);

  std::vector<Permutation> members;
  for_each_permutation(
      n, [&](const Permutation& p) {
        if (preserves_blocks(p, label)) members.push_back(p);
      },
      degree_cap);

  std::vector<Permutation> gens;
  for (const auto& block : profile.blocks) {
    for (std::size_t k = 0; k + 1 < block.size(); ++k) {
      gens.push_back(Permutation::from_cycles(n, {{block[k], block[k + 1]}}));
    }
  }
  // The generated group must coincide with the enumerated set; this is what
  // certifies the enumeration as a subgroup.
  Subgroup s = generate_subgroup(gens, n, static_cast<std::size_t>(factorial(n)));
  if (s.elements() != members) throw std::logic_error("stabilizer enumeration is not the generated subgroup");
  return s;
}

namespace {

bool fill_bins(const std::vector<std::size_t>& parts, std::size_t next, std::vector<std::size_t>& remaining) {
  if (next == parts.size()) {
    return std::all_of(remaining.begin(), remaining.end(), [](std::size_t r) { return r == 0; });
  }
  std::set<std::size_t> tried;
  for (auto& slot : remaining) {
    if (slot < parts[next] || !tried.insert(slot).second) continue;
    slot -= parts[next];
    if (fill_bins(parts, next + 1, remaining)) return true;
    slot += parts[next];
  }
  return false;
}

}  // namespace

bool is_subpartition(const IntegerPartition& mu, const IntegerPartition& lambda) {
  if (mu.total() != lambda.total()) {
    throw InvalidArgument("partitions of " + std::to_string(mu.total()) + " and " + std::to_string(lambda.total()) +
                          " cannot be compared");
  }
  std::vector<std::size_t> remaining = lambda.parts();
  return fill_bins(mu.parts(), 0, remaining);
}

std::vector<IntegerPartition> nontrivial_directions(const DiagonalDensity& rho0, std::size_t degree_cap, double tol) {
  const std::size_t n = rho0.size();
  check_enumeration_degree(n, degree_cap);
  const auto label = block_labels(spectrum_profile(rho0, tol), n);
  std::set<IntegerPartition> moving;
  for_each_permutation(
      n, [&](const Permutation& p) {
        if (!preserves_blocks(p, label)) moving.insert(partition_of(p));
      },
      degree_cap);
  std::vector<IntegerPartition> out;
  for (auto& mu : integer_partitions(n)) {
    if (moving.contains(mu)) out.push_back(std::move(mu));
  }
  return out;
}

}  // namespace kraus_symm
