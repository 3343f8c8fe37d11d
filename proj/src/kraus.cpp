#include "kraus_symm/kraus.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "kraus_symm/errors.hpp"

namespace kraus_symm {

double KrausCoefficients::trace_residual() const {
  return std::abs(g * g + static_cast<double>(m - 1) * f * f - 1.0);
}

KrausCoefficients coefficients(double t, std::size_t m) {
  if (std::isnan(t) || t < 0.0) throw InvalidArgument("time must be nonnegative, got " + std::to_string(t));
  if (m == 0) throw InvalidArgument("subgroup order must be positive");
  const double decay = std::exp(-t);
  const double md = static_cast<double>(m);
  KrausCoefficients c;
  c.m = m;
  c.t = t;
  c.g = std::sqrt((1.0 + (md - 1.0) * decay) / md);
  // -expm1(-t) = 1 - e^{-t} without cancellation at small t.
  c.f = std::sqrt(-std::expm1(-t) / md);
  return c;
}

KrausFamily::KrausFamily(Subgroup group, KrausCoefficients coeffs)
    : group_(std::move(group)), coeffs_(coeffs) {
  if (coeffs_.m != group_.order()) {
    throw DimensionMismatch("coefficients built for order " + std::to_string(coeffs_.m) +
                            " but subgroup has order " + std::to_string(group_.order()));
  }
}

std::vector<Eigen::MatrixXd> KrausFamily::dense_members() const {
  const auto n = static_cast<Eigen::Index>(dimension());
  std::vector<Eigen::MatrixXd> out;
  out.reserve(size());
  out.push_back(coeffs_.g * Eigen::MatrixXd::Identity(n, n));
  for (const auto& sigma : group_.elements()) {
    if (sigma.is_identity()) continue;
    out.push_back(coeffs_.f * defining_matrix(sigma).dense());
  }
  return out;
}

KrausFamily build_family(const Subgroup& s, double t) { return KrausFamily(s, coefficients(t, s.order())); }

DiagonalDensity apply_udm(const KrausFamily& family, const DiagonalDensity& rho) {
  if (rho.size() != family.dimension()) {
    throw DimensionMismatch("state of dimension " + std::to_string(rho.size()) + " for a family of dimension " +
                            std::to_string(family.dimension()));
  }
  const auto& c = family.coefficients();
  const double g2 = c.g * c.g;
  const double f2 = c.f * c.f;
  std::vector<double> out(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) out[i] = g2 * rho[i];
  std::vector<double> moved_sum(rho.size(), 0.0);
  for (const auto& sigma : family.subgroup().elements()) {
    if (sigma.is_identity()) continue;
    auto moved = defining_matrix(sigma).conjugate_diagonal(rho.values());
    for (std::size_t i = 0; i < moved.size(); ++i) moved_sum[i] += moved[i];
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += f2 * moved_sum[i];
  if (c.trace_residual() > kAlgebraicTolerance) return DiagonalDensity::unchecked(std::move(out));
  return DiagonalDensity(std::move(out));
}

namespace {

enum class Side { kLeft, kRight };

double condition_residual(const KrausFamily& family, Side side) {
  const auto n = static_cast<Eigen::Index>(family.dimension());
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  for (const auto& k : family.dense_members()) {
    sum += side == Side::kLeft ? Eigen::MatrixXd(k * k.transpose()) : Eigen::MatrixXd(k.transpose() * k);
  }
  return (sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace

double kraus_condition_residual(const KrausFamily& family) { return condition_residual(family, Side::kLeft); }

double kraus_adjoint_condition_residual(const KrausFamily& family) {
  return condition_residual(family, Side::kRight);
}

double coefficient_condition_residual(std::span<const GroupAlgebraTerm> terms) {
  double total = 0.0;
  for (const auto& term : terms) total += std::norm(term.coefficient);
  return std::abs(total - 1.0);
}

double kraus_condition_residual(std::span<const GroupAlgebraTerm> terms) {
  if (terms.empty()) throw InvalidArgument("empty group-algebra element");
  const auto n = static_cast<Eigen::Index>(terms.front().element.degree());
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& term : terms) {
    if (static_cast<Eigen::Index>(term.element.degree()) != n) {
      throw DimensionMismatch("group-algebra terms have differing degrees");
    }
    Eigen::MatrixXcd k = term.coefficient * defining_matrix(term.element).dense().cast<std::complex<double>>();
    sum += k * k.adjoint();
  }
  return (sum - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

// --- Choi matrices -----------------------------------------------------------

ChoiMatrix::ChoiMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw DimensionMismatch("Choi matrix must be square");
  const auto side = static_cast<std::size_t>(entries_.rows());
  channel_dim_ = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(side))));
  if (channel_dim_ * channel_dim_ != side) throw DimensionMismatch("Choi matrix side is not a perfect square");
}

double ChoiMatrix::hermiticity_residual() const {
  if (entries_.size() == 0) return 0.0;
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd ChoiMatrix::eigenvalues() const {
  Eigen::MatrixXcd hermitian = 0.5 * (entries_ + entries_.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double ChoiMatrix::min_eigenvalue() const { return eigenvalues().minCoeff(); }

ChoiMatrix choi_matrix(const KrausFamily& family) {
  const auto n = static_cast<Eigen::Index>(family.dimension());
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (const auto& k : family.dense_members()) {
    // Eigen storage is column-major, so the raw buffer is the column-stacked vec.
    Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXd>(k.data(), n * n).cast<std::complex<double>>();
    c += v * v.adjoint();
  }
  return ChoiMatrix(std::move(c));
}

ChoiMatrix choi_of_map(std::size_t n, const std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd&)>& map) {
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(dim * dim, dim * dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(dim, dim);
      unit(i, j) = 1.0;
      Eigen::MatrixXcd image = map(unit);
      if (image.rows() != dim || image.cols() != dim) throw DimensionMismatch("map changed the matrix dimension");
      c.block(i * dim, j * dim, dim, dim) = image;
    }
  }
  return ChoiMatrix(std::move(c));
}

bool is_completely_positive(const ChoiMatrix& choi, double tol) { return choi.min_eigenvalue() >= -tol; }

bool is_completely_positive(const KrausFamily& family, double tol) {
  return is_completely_positive(choi_matrix(family), tol);
}

}  // namespace kraus_symm
