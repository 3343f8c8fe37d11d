#pragma once

// Kraus families attached to subgroups S ⊆ Σn:
//
//   { g(t)·Id } ∪ { f(t)·R_σ : σ ∈ S, σ ≠ e },
//   g(t)² = (1 + (|S|-1) e^{-t}) / |S|,   f(t)² = (1 - e^{-t}) / |S|.
//
// The identity element is excluded from the f-terms; only then does
// g² + (|S|-1) f² = 1 hold, which is the trace-preservation condition.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "kraus_symm/density.hpp"
#include "kraus_symm/permutation.hpp"

namespace kraus_symm {

struct KrausCoefficients {
  double g = 1.0;
  double f = 0.0;
  std::size_t m = 1;  // subgroup order
  double t = 0.0;

  /// |g² + (m-1) f² - 1|.
  double trace_residual() const;
};

/// Throws InvalidArgument for negative or NaN t, or m = 0. t = +inf is the limit.
KrausCoefficients coefficients(double t, std::size_t m);

class KrausFamily {
 public:
  /// Pairs a subgroup with arbitrary coefficients, with no trace check, so
  /// that deliberately broken families can be represented. Throws
  /// DimensionMismatch if coeffs.m differs from the subgroup order.
  KrausFamily(Subgroup group, KrausCoefficients coeffs);

  const Subgroup& subgroup() const { return group_; }
  const KrausCoefficients& coefficients() const { return coeffs_; }
  std::size_t dimension() const { return group_.degree(); }
  /// Number of Kraus operators, equal to |S|.
  std::size_t size() const { return group_.order(); }

  /// g·Id first, then f·R_σ for the non-identity elements in subgroup order.
  std::vector<Eigen::MatrixXd> dense_members() const;

 private:
  Subgroup group_;
  KrausCoefficients coeffs_;
};

KrausFamily build_family(const Subgroup& s, double t);

/// g²ρ + f² Σ_{σ≠e} R_σ ρ R_σ^{-1}, evaluated on the diagonal. The result is
/// validated only when the family itself satisfies the trace condition.
DiagonalDensity apply_udm(const KrausFamily& family, const DiagonalDensity& rho);

/// max |Σ K_α K_α^† - Id| over entries.
double kraus_condition_residual(const KrausFamily& family);
/// max |Σ K_α^† K_α - Id| over entries.
double kraus_adjoint_condition_residual(const KrausFamily& family);

/// One term c_σ σ of a group-algebra element, used as the Kraus operator c_σ R_σ.
struct GroupAlgebraTerm {
  Permutation element;
  std::complex<double> coefficient;
};

/// |Σ |c_σ|² - 1|: the coefficient condition for general time-dependent
/// coefficients. Says nothing about semigroup structure.
double coefficient_condition_residual(std::span<const GroupAlgebraTerm> terms);

/// max |Σ (c_σ R_σ)(c_σ R_σ)^† - Id| with dense matrices.
double kraus_condition_residual(std::span<const GroupAlgebraTerm> terms);

/// Choi matrix C = Σ_{ij} E_ij ⊗ Φ(E_ij) of an n-dimensional channel Φ.
/// For a Kraus channel this is Σ_α vec(K_α) vec(K_α)^† with column-stacking vec.
class ChoiMatrix {
 public:
  explicit ChoiMatrix(Eigen::MatrixXcd entries);

  const Eigen::MatrixXcd& entries() const { return entries_; }
  /// n, the dimension of the underlying channel.
  std::size_t channel_dimension() const { return channel_dim_; }

  double hermiticity_residual() const;
  /// Eigenvalues of the Hermitian part, ascending.
  Eigen::VectorXd eigenvalues() const;
  double min_eigenvalue() const;

 private:
  Eigen::MatrixXcd entries_;
  std::size_t channel_dim_;
};

ChoiMatrix choi_matrix(const KrausFamily& family);

/// Choi matrix of an arbitrary linear map on n×n matrices.
ChoiMatrix choi_of_map(std::size_t n, const std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd&)>& map);

/// Choi's criterion: smallest Choi eigenvalue ≥ -tol.
bool is_completely_positive(const ChoiMatrix& choi, double tol = kEigenvalueTolerance);
bool is_completely_positive(const KrausFamily& family, double tol = kEigenvalueTolerance);

}  // namespace kraus_symm
