#pragma once

// Diagonal states as points of a simplex: diag(λ1..λn) ↦ Σ λ_i P_i.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "kraus_symm/density.hpp"
#include "kraus_symm/permutation.hpp"

namespace kraus_symm {

inline constexpr double kGeometryTolerance = 1e-10;

class SimplexEmbedding {
 public:
  /// Columns of `vertices` are P_1..P_n in an ambient space of dimension
  /// vertices.rows(). Throws InvalidArgument unless they are affinely
  /// independent.
  explicit SimplexEmbedding(Eigen::MatrixXd vertices);

  std::size_t vertex_count() const { return static_cast<std::size_t>(vertices_.cols()); }
  std::size_t ambient_dimension() const { return static_cast<std::size_t>(vertices_.rows()); }
  const Eigen::MatrixXd& vertices() const { return vertices_; }
  Eigen::VectorXd vertex(std::size_t i) const { return vertices_.col(static_cast<Eigen::Index>(i)); }

  /// Rank of {P_i - P_1}; n - 1 for a valid embedding.
  std::size_t affine_rank() const;
  Eigen::VectorXd centroid() const { return vertices_.rowwise().mean(); }

 private:
  Eigen::MatrixXd vertices_;
};

/// The segment X = λ1 - λ2 ∈ [-1, 1]: P1 = (1), P2 = (-1).
SimplexEmbedding qubit_embedding();
/// P1 = (1, √3), P2 = (-1, √3), P3 = (0, -2/√3).
SimplexEmbedding qutrit_embedding();
/// Canonical basis vectors of R^n.
SimplexEmbedding standard_embedding(std::size_t n);
/// qubit for n = 2, qutrit for n = 3, standard otherwise.
SimplexEmbedding default_embedding(std::size_t n);

struct SimplexPoint {
  Eigen::VectorXd coordinates;
  std::vector<double> barycentric;
};

/// Σ λ_i P_i. Throws DimensionMismatch when n differs.
SimplexPoint embed(const DiagonalDensity& rho, const SimplexEmbedding& e);

/// The planar chart X1 = (λ1 - λ2)/2, X2 = (λ1 + λ2)/2 - 1/3 for a qutrit.
/// An affine image of the vertex embedding, not equal to it.
std::array<double, 2> qutrit_chart(const DiagonalDensity& rho);

/// Barycenter of the sub-simplex spanned by the cycle's vertices (0-based).
SimplexPoint cycle_barycenter(std::span<const Index> cycle, const SimplexEmbedding& e);

/// The point image under σ acting on vertices, P_i ↦ P_{σ(i)}.
SimplexPoint act_on_point(const Permutation& sigma, const SimplexPoint& point, const SimplexEmbedding& e);

/// Columns P_{i1} - P_{ij}, j = 2..μ, for every cycle (i1 ... iμ): a spanning
/// set of L(c_1) ⊕ ... ⊕ L(c_r). May have zero columns.
Eigen::MatrixXd cycle_direction_space(const CycleDecomposition& cycles, const SimplexEmbedding& e);

/// Euclidean distance from v to the column span of `basis`.
double distance_to_span(const Eigen::VectorXd& v, const Eigen::MatrixXd& basis);

/// Distance from c to the line through a and b; distance from c to a when
/// a and b coincide. Zero iff the three points are affinely dependent.
double collinearity_residual(const Eigen::VectorXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c);

struct Trajectory {
  Permutation sigma;
  SimplexEmbedding embedding;
  std::vector<double> times;
  std::vector<DiagonalDensity> states;
  std::vector<SimplexPoint> points;
  DiagonalDensity limit_state;
  SimplexPoint limit;

  /// max over samples of the distance to the line through points[0] and limit.
  double collinearity_residual() const;
};

/// Samples the closed-form orbit of ρ0 under ⟨σ⟩. Throws InvalidArgument on
/// an empty, negative or non-increasing time list.
Trajectory trajectory(const DiagonalDensity& rho0, const Permutation& sigma, std::span<const double> times,
                      const SimplexEmbedding& e);

}  // namespace kraus_symm
