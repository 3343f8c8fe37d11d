#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace kraus_symm {

inline constexpr double kAlgebraicTolerance = 1e-12;
inline constexpr double kEigenvalueTolerance = 1e-10;

/// A diagonal density matrix diag(λ1..λn): nonnegative entries summing to one.
class DiagonalDensity {
 public:
  /// Validates λ_i ≥ -tol and |Σλ_i - 1| ≤ tol; throws InvalidArgument.
  explicit DiagonalDensity(std::vector<double> eigenvalues, double tol = kAlgebraicTolerance);

  /// Accepts values within `tol` of a valid state; tiny negatives are clamped
  /// to zero, and the values are rescaled unless they already sum to one
  /// within kAlgebraicTolerance. Used for user input, which is rarely
  /// normalized to the last digit.
  static DiagonalDensity normalized(std::vector<double> eigenvalues, double tol = 1e-9);

  /// No validation. For intermediate results of deliberately broken maps.
  static DiagonalDensity unchecked(std::vector<double> eigenvalues);

  static DiagonalDensity maximally_mixed(std::size_t n);
  /// diag(0..1..0) with the 1 at 0-based position k.
  static DiagonalDensity pure(std::size_t n, std::size_t k);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }
  double trace() const;

 private:
  DiagonalDensity() = default;
  std::vector<double> values_;
};

/// max_i |a_i - b_i|. Throws DimensionMismatch on size mismatch.
double max_abs_diff(std::span<const double> a, std::span<const double> b);
double max_abs_diff(const DiagonalDensity& a, const DiagonalDensity& b);

}  // namespace kraus_symm
