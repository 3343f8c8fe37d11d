#include "kraus_symm/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "kraus_symm/errors.hpp"

namespace kraus_symm {

namespace {

void validate(const std::vector<double>& v, double tol) {
  if (v.empty()) throw InvalidArgument("density must have at least one eigenvalue");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) throw InvalidArgument("eigenvalue " + std::to_string(i + 1) + " is not finite");
    if (v[i] < -tol) {
      throw InvalidArgument("eigenvalue " + std::to_string(i + 1) + " = " + std::to_string(v[i]) + " is negative");
    }
  }
  double sum = std::accumulate(v.begin(), v.end(), 0.0);
  if (std::abs(sum - 1.0) > tol) {
    throw InvalidArgument("eigenvalues sum to " + std::to_string(sum) + ", expected 1");
  }
}

}  // namespace

DiagonalDensity::DiagonalDensity(std::vector<double> eigenvalues, double tol) : values_(std::move(eigenvalues)) {
  validate(values_, tol);
}

DiagonalDensity DiagonalDensity::normalized(std::vector<double> eigenvalues, double tol) {
  validate(eigenvalues, tol);
  for (double& x : eigenvalues) x = std::max(x, 0.0);
  const double sum = std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
  if (std::abs(sum - 1.0) > kAlgebraicTolerance) {
    for (double& x : eigenvalues) x /= sum;
  }
  return unchecked(std::move(eigenvalues));
}

DiagonalDensity DiagonalDensity::unchecked(std::vector<double> eigenvalues) {
  DiagonalDensity d;
  d.values_ = std::move(eigenvalues);
  return d;
}

DiagonalDensity DiagonalDensity::maximally_mixed(std::size_t n) {
  return unchecked(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DiagonalDensity DiagonalDensity::pure(std::size_t n, std::size_t k) {
  if (k >= n) throw InvalidArgument("pure state index out of range");
  std::vector<double> v(n, 0.0);
  v[k] = 1.0;
  return unchecked(std::move(v));
}

double DiagonalDensity::trace() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("cannot compare vectors of size " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs_diff(const DiagonalDensity& a, const DiagonalDensity& b) { return max_abs_diff(a.values(), b.values()); }

}  // namespace kraus_symm
