#pragma once

// Orbits of diagonal states under the Kraus semigroups of kraus.hpp.
//
// For S = ⟨σ⟩ with cycles c_1..c_r the orbit has the closed form
//
//   ρ(t) = e^{-t} ρ(0) + (1 - e^{-t}) B,
//
// where B is constant on each cycle and equal to that cycle's mean. For a
// general subgroup the same formula holds with the cycles replaced by the
// orbits of S on {1..n}.

#include <cstddef>
#include <span>
#include <vector>

#include "kraus_symm/density.hpp"
#include "kraus_symm/kraus.hpp"
#include "kraus_symm/permutation.hpp"

namespace kraus_symm {

struct BlockAverage {
  std::vector<double> block_values;      // ν_i, the mean over block i
  std::vector<std::size_t> block_sizes;  // μ_i
  DiagonalDensity assembled;             // B
};

/// Mean of ρ over each cycle, written back on the cycle's indices.
BlockAverage block_average(const DiagonalDensity& rho0, const CycleDecomposition& cycles);
/// Same over arbitrary blocks, e.g. the orbits of a subgroup.
BlockAverage block_average(const DiagonalDensity& rho0, const SetPartition& blocks);

/// Closed-form orbit under ⟨σ⟩. Throws InvalidArgument for negative t and
/// DimensionMismatch for differing degrees.
DiagonalDensity evolve_closed_form(const DiagonalDensity& rho0, const Permutation& sigma, double t);
/// Closed-form orbit under a general subgroup, via its orbit partition.
DiagonalDensity evolve_closed_form(const DiagonalDensity& rho0, const Subgroup& s, double t);

/// Literal term-by-term sum g²ρ + f² Σ_{σ≠e} R_σ ρ R_σ^{-1} with dense
/// matrix products. Independent of the closed form and used as its oracle.
DiagonalDensity evolve_bruteforce(const DiagonalDensity& rho0, const Subgroup& s, double t);
/// Same with explicit (possibly perturbed) coefficients.
DiagonalDensity evolve_bruteforce(const DiagonalDensity& rho0, const Subgroup& s, const KrausCoefficients& coeffs);

/// lim_{t→∞} ρ_σ(t) = B.
DiagonalDensity limit_state(const DiagonalDensity& rho0, const Permutation& sigma);
DiagonalDensity limit_state(const DiagonalDensity& rho0, const Subgroup& s);

/// max-norm of F_{(s,t)}(F_{(t,0)}(ρ0)) - F_{(s,0)}(ρ0). Each map is applied
/// as its Kraus family, the (s,t) one with elapsed time s - t. Throws
/// InvalidArgument unless s ≥ t ≥ 0.
double semigroup_residual(const Permutation& sigma, const DiagonalDensity& rho0, double s, double t);
double semigroup_residual(const Subgroup& group, const DiagonalDensity& rho0, double s, double t);

/// K_S ≅ K_T iff S and T have the same orbits on {1..n}. Decided
/// combinatorially. Throws DimensionMismatch for differing degrees.
bool equivalent(const Subgroup& s, const Subgroup& t);

/// Evolution under τSτ^{-1} obtained from that under S:
/// R_τ · F^S(R_τ^{-1} ρ0 R_τ) · R_τ^{-1}.
DiagonalDensity conjugate_transport(const Subgroup& s, const Permutation& tau, const DiagonalDensity& rho0,
                                    double t);

/// max over cycles c of |Σ_{h∈c} (ρ0_h - ρt_h)|. Zero exactly when ρt lies in
/// the affine subspace through ρ0 that contains the orbit.
double orbit_system_residual(const DiagonalDensity& rho0, const DiagonalDensity& rho_t,
                             const CycleDecomposition& cycles);

/// A subgroup paired with an initial state of matching degree.
class EvolutionSpec {
 public:
  EvolutionSpec(Subgroup group, DiagonalDensity rho0);
  EvolutionSpec(const Permutation& sigma, DiagonalDensity rho0);

  const Subgroup& group() const { return group_; }
  const DiagonalDensity& initial_state() const { return rho0_; }

  /// F^S_{(t,0)}(ρ0).
  DiagonalDensity at(double t) const { return evolve_closed_form(rho0_, group_, t); }
  DiagonalDensity limit() const { return limit_state(rho0_, group_); }

 private:
  Subgroup group_;
  DiagonalDensity rho0_;
};

}  // namespace kraus_symm
