#include "kraus_symm/geometry.hpp"

#include <cmath>
#include <string>

#include "kraus_symm/errors.hpp"
#include "kraus_symm/evolution.hpp"

namespace kraus_symm {

namespace {

std::size_t numeric_rank(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(kGeometryTolerance);
  return static_cast<std::size_t>(qr.rank());
}

Eigen::MatrixXd differences_from_first(const Eigen::MatrixXd& vertices) {
  if (vertices.cols() < 2) return Eigen::MatrixXd(vertices.rows(), 0);
  return vertices.rightCols(vertices.cols() - 1).colwise() - vertices.col(0);
}

}  // namespace

SimplexEmbedding::SimplexEmbedding(Eigen::MatrixXd vertices) : vertices_(std::move(vertices)) {
  if (vertices_.cols() == 0) throw InvalidArgument("a simplex needs at least one vertex");
  if (affine_rank() + 1 != vertex_count()) {
    throw InvalidArgument("simplex vertices are not affinely independent");
  }
}

std::size_t SimplexEmbedding::affine_rank() const { return numeric_rank(differences_from_first(vertices_)); }

SimplexEmbedding qubit_embedding() {
  Eigen::MatrixXd v(1, 2);
  v << 1.0, -1.0;
  return SimplexEmbedding(std::move(v));
}

SimplexEmbedding qutrit_embedding() {
  const double s3 = std::sqrt(3.0);
  Eigen::MatrixXd v(2, 3);
  v << 1.0, -1.0, 0.0,  //
      s3, s3, -2.0 / s3;
  return SimplexEmbedding(std::move(v));
}

SimplexEmbedding standard_embedding(std::size_t n) {
  const auto d = static_cast<Eigen::Index>(n);
  return SimplexEmbedding(Eigen::MatrixXd::Identity(d, d));
}

SimplexEmbedding default_embedding(std::size_t n) {
  if (n == 2) return qubit_embedding();
  if (n == 3) return qutrit_embedding();
  return standard_embedding(n);
}

SimplexPoint embed(const DiagonalDensity& rho, const SimplexEmbedding& e) {
  if (rho.size() != e.vertex_count()) {
    throw DimensionMismatch("state of dimension " + std::to_string(rho.size()) + " for a simplex with " +
                            std::to_string(e.vertex_count()) + " vertices");
  }
  SimplexPoint p;
  p.barycentric.assign(rho.values().begin(), rho.values().end());
  Eigen::Map<const Eigen::VectorXd> weights(p.barycentric.data(), static_cast<Eigen::Index>(p.barycentric.size()));
  p.coordinates = e.vertices() * weights;
  return p;
}

std::array<double, 2> qutrit_chart(const DiagonalDensity& rho) {
  if (rho.size() != 3) throw DimensionMismatch("the qutrit chart needs a 3-dimensional state");
  return {(rho[0] - rho[1]) / 2.0, (rho[0] + rho[1]) / 2.0 - 1.0 / 3.0};
}

SimplexPoint cycle_barycenter(std::span<const Index> cycle, const SimplexEmbedding& e) {
  if (cycle.empty()) throw InvalidArgument("empty cycle has no barycenter");
  SimplexPoint p;
  p.barycentric.assign(e.vertex_count(), 0.0);
  p.coordinates = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(e.ambient_dimension()));
  const double w = 1.0 / static_cast<double>(cycle.size());
  for (Index i : cycle) {
    if (i >= e.vertex_count()) throw InvalidArgument("cycle index " + std::to_string(i + 1) + " outside the simplex");
    p.barycentric[i] += w;
  }
  for (std::size_t i = 0; i < e.vertex_count(); ++i) p.coordinates += p.barycentric[i] * e.vertex(i);
  return p;
}

SimplexPoint act_on_point(const Permutation& sigma, const SimplexPoint& point, const SimplexEmbedding& e) {
  if (sigma.degree() != e.vertex_count() || point.barycentric.size() != e.vertex_count()) {
    throw DimensionMismatch("permutation, point and simplex disagree on n");
  }
  SimplexPoint out;
  out.barycentric = defining_matrix(sigma).conjugate_diagonal(point.barycentric);
  Eigen::Map<const Eigen::VectorXd> weights(out.barycentric.data(), static_cast<Eigen::Index>(out.barycentric.size()));
  out.coordinates = e.vertices() * weights;
  return out;
}

Eigen::MatrixXd cycle_direction_space(const CycleDecomposition& cycles, const SimplexEmbedding& e) {
  if (cycles.degree() != e.vertex_count()) throw DimensionMismatch("cycles and simplex disagree on n");
  std::vector<Eigen::VectorXd> columns;
  for (const auto& c : cycles.cycles()) {
    for (std::size_t j = 1; j < c.size(); ++j) columns.push_back(e.vertex(c.front()) - e.vertex(c[j]));
  }
  Eigen::MatrixXd out(static_cast<Eigen::Index>(e.ambient_dimension()), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t k = 0; k < columns.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = columns[k];
  return out;
}

double distance_to_span(const Eigen::VectorXd& v, const Eigen::MatrixXd& basis) {
  if (basis.cols() == 0) return v.norm();
  Eigen::VectorXd coeffs = basis.completeOrthogonalDecomposition().solve(v);
  return (basis * coeffs - v).norm();
}

double collinearity_residual(const Eigen::VectorXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c) {
  const Eigen::VectorXd dir = b - a;
  const Eigen::VectorXd off = c - a;
  const double len2 = dir.squaredNorm();
  if (len2 == 0.0) return off.norm();
  return (off - (off.dot(dir) / len2) * dir).norm();
}

double Trajectory::collinearity_residual() const {
  double worst = 0.0;
  for (const auto& p : points) {
    worst = std::max(worst, kraus_symm::collinearity_residual(points.front().coordinates, limit.coordinates,
                                                              p.coordinates));
  }
  return worst;
}

Trajectory trajectory(const DiagonalDensity& rho0, const Permutation& sigma, std::span<const double> times,
                      const SimplexEmbedding& e) {
  if (times.empty()) throw InvalidArgument("trajectory needs at least one sample time");
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (std::isnan(times[k]) || times[k] < 0.0) throw InvalidArgument("sample times must be nonnegative");
    if (k > 0 && !(times[k] > times[k - 1])) throw InvalidArgument("sample times must be increasing");
  }
  DiagonalDensity limit = limit_state(rho0, sigma);
  SimplexPoint limit_point = embed(limit, e);
  Trajectory traj{sigma, e, {times.begin(), times.end()}, {}, {}, std::move(limit), std::move(limit_point)};
  traj.states.reserve(times.size());
  traj.points.reserve(times.size());
  for (double t : times) {
    traj.states.push_back(evolve_closed_form(rho0, sigma, t));
    traj.points.push_back(embed(traj.states.back(), e));
  }
  return traj;
}

}  // namespace kraus_symm
