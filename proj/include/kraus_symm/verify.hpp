#pragma once

// Randomized self-check of the Kraus semigroups: trace condition, complete
// positivity, semigroup law, closed form against the literal Kraus sum, and
// the per-cycle zero-sum property of orbit points.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kraus_symm/density.hpp"
#include "kraus_symm/permutation.hpp"

namespace kraus_symm {

struct VerifyConfig {
  std::uint64_t seed = 1;
  std::size_t cases = 200;
  std::size_t max_degree = 5;
  /// When set every case uses ⟨sigma⟩; otherwise σ is drawn uniformly from
  /// Σn with n uniform in [1, max_degree].
  std::optional<Permutation> sigma;
  /// Added to f in every Kraus family: a fault injector for the checker.
  double perturb = 0.0;
  double tol = kAlgebraicTolerance;
  double cp_tol = kEigenvalueTolerance;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  /// JSON object describing the first breaching case, enough to replay it.
  std::optional<std::string> first_failure;

  bool passed() const { return !first_failure.has_value(); }
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<SuiteResult> suites;

  bool passed() const;
};

VerifyReport run_verification(const VerifyConfig& config);

}  // namespace kraus_symm
