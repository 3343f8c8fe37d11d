#include "kraus_symm/evolution.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "kraus_symm/errors.hpp"

namespace kraus_symm {

namespace {

void require_degree(std::size_t state_dim, std::size_t degree) {
  if (state_dim != degree) {
    throw DimensionMismatch("state of dimension " + std::to_string(state_dim) + " paired with a permutation of degree " +
                            std::to_string(degree));
  }
}

void require_time(double t) {
  if (std::isnan(t) || t < 0.0) throw InvalidArgument("time must be nonnegative, got " + std::to_string(t));
}

BlockAverage average_over(const DiagonalDensity& rho0, const std::vector<std::vector<Index>>& blocks) {
  BlockAverage out{{}, {}, DiagonalDensity::unchecked({})};
  std::vector<double> assembled(rho0.size(), 0.0);
  for (const auto& block : blocks) {
    double sum = 0.0;
    for (Index h : block) sum += rho0[h];
    const double mean = sum / static_cast<double>(block.size());
    out.block_values.push_back(mean);
    out.block_sizes.push_back(block.size());
    for (Index h : block) assembled[h] = mean;
  }
  out.assembled = DiagonalDensity(std::move(assembled));
  return out;
}

DiagonalDensity relax_towards(const DiagonalDensity& rho0, const DiagonalDensity& target, double t) {
  const double decay = std::exp(-t);
  const double gained = -std::expm1(-t);
  std::vector<double> out(rho0.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = decay * rho0[i] + gained * target[i];
  return DiagonalDensity(std::move(out));
}

}  // namespace

BlockAverage block_average(const DiagonalDensity& rho0, const CycleDecomposition& cycles) {
  require_degree(rho0.size(), cycles.degree());
  return average_over(rho0, cycles.cycles());
}

BlockAverage block_average(const DiagonalDensity& rho0, const SetPartition& blocks) {
  require_degree(rho0.size(), blocks.degree());
  return average_over(rho0, blocks.blocks());
}

DiagonalDensity evolve_closed_form(const DiagonalDensity& rho0, const Permutation& sigma, double t) {
  require_time(t);
  require_degree(rho0.size(), sigma.degree());
  return relax_towards(rho0, block_average(rho0, cycle_decomposition(sigma)).assembled, t);
}

DiagonalDensity evolve_closed_form(const DiagonalDensity& rho0, const Subgroup& s, double t) {
  require_time(t);
  require_degree(rho0.size(), s.degree());
  return relax_towards(rho0, block_average(rho0, orbit_partition(s)).assembled, t);
}

DiagonalDensity evolve_bruteforce(const DiagonalDensity& rho0, const Subgroup& s, const KrausCoefficients& coeffs) {
  require_degree(rho0.size(), s.degree());
  const auto n = static_cast<Eigen::Index>(rho0.size());
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) rho(i, i) = rho0[static_cast<std::size_t>(i)];

  Eigen::MatrixXd moved = Eigen::MatrixXd::Zero(n, n);
  for (const auto& sigma : s.elements()) {
    if (sigma.is_identity()) continue;
    const Eigen::MatrixXd r = defining_matrix(sigma).dense();
    const Eigen::MatrixXd r_inv = defining_matrix(sigma.inverse()).dense();
    moved += r * rho * r_inv;
  }
  const Eigen::MatrixXd result = coeffs.g * coeffs.g * rho + coeffs.f * coeffs.f * moved;

  std::vector<double> diag(rho0.size());
  for (Eigen::Index i = 0; i < n; ++i) diag[static_cast<std::size_t>(i)] = result(i, i);
  if (coeffs.trace_residual() > kAlgebraicTolerance) return DiagonalDensity::unchecked(std::move(diag));
  return DiagonalDensity(std::move(diag));
}

DiagonalDensity evolve_bruteforce(const DiagonalDensity& rho0, const Subgroup& s, double t) {
  return evolve_bruteforce(rho0, s, coefficients(t, s.order()));
}

DiagonalDensity limit_state(const DiagonalDensity& rho0, const Permutation& sigma) {
  require_degree(rho0.size(), sigma.degree());
  return block_average(rho0, cycle_decomposition(sigma)).assembled;
}

DiagonalDensity limit_state(const DiagonalDensity& rho0, const Subgroup& s) {
  require_degree(rho0.size(), s.degree());
  return block_average(rho0, orbit_partition(s)).assembled;
}

double semigroup_residual(const Subgroup& group, const DiagonalDensity& rho0, double s, double t) {
  require_time(t);
  if (std::isnan(s) || s < t) {
    throw InvalidArgument("semigroup check needs s >= t, got s=" + std::to_string(s) + " t=" + std::to_string(t));
  }
  require_degree(rho0.size(), group.degree());
  const DiagonalDensity mid = apply_udm(build_family(group, t), rho0);
  const DiagonalDensity composed = apply_udm(build_family(group, s - t), mid);
  const DiagonalDensity direct = apply_udm(build_family(group, s), rho0);
  return max_abs_diff(composed, direct);
}

double semigroup_residual(const Permutation& sigma, const DiagonalDensity& rho0, double s, double t) {
  require_degree(rho0.size(), sigma.degree());
  return semigroup_residual(cyclic_subgroup(sigma), rho0, s, t);
}

bool equivalent(const Subgroup& s, const Subgroup& t) {
  if (s.degree() != t.degree()) {
    throw DimensionMismatch("subgroups of degree " + std::to_string(s.degree()) + " and " +
                            std::to_string(t.degree()) + " cannot be compared");
  }
  return orbit_partition(s) == orbit_partition(t);
}

DiagonalDensity conjugate_transport(const Subgroup& s, const Permutation& tau, const DiagonalDensity& rho0,
                                    double t) {
  require_degree(rho0.size(), s.degree());
  require_degree(rho0.size(), tau.degree());
  const PermutationMatrix r_tau = defining_matrix(tau);
  // R_τ^{-1} ρ0 R_τ is conjugation by R_{τ^{-1}}.
  const auto pulled_back = r_tau.adjoint().conjugate_diagonal(rho0.values());
  const DiagonalDensity evolved = evolve_closed_form(DiagonalDensity(pulled_back), s, t);
  return DiagonalDensity(r_tau.conjugate_diagonal(evolved.values()));
}

double orbit_system_residual(const DiagonalDensity& rho0, const DiagonalDensity& rho_t,
                             const CycleDecomposition& cycles) {
  if (rho0.size() != rho_t.size()) throw DimensionMismatch("orbit residual needs states of equal dimension");
  require_degree(rho0.size(), cycles.degree());
  double worst = 0.0;
  for (const auto& c : cycles.cycles()) {
    double sum = 0.0;
    for (Index h : c) sum += rho0[h] - rho_t[h];
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

EvolutionSpec::EvolutionSpec(Subgroup group, DiagonalDensity rho0) : group_(std::move(group)), rho0_(std::move(rho0)) {
  require_degree(rho0_.size(), group_.degree());
}

EvolutionSpec::EvolutionSpec(const Permutation& sigma, DiagonalDensity rho0)
    : EvolutionSpec(cyclic_subgroup(sigma), std::move(rho0)) {}

}  // namespace kraus_symm
