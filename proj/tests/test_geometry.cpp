#include <cmath>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "kraus_symm/cycle_notation.hpp"
#include "kraus_symm/errors.hpp"
#include "kraus_symm/geometry.hpp"
#include "kraus_symm/trajectory_io.hpp"
#include "test_support.hpp"

using namespace kraus_symm;
using Catch::Matchers::WithinAbs;

namespace {

const double kRoot3 = std::sqrt(3.0);

double norm_diff(const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return (a - b).lpNorm<Eigen::Infinity>(); }

}  // namespace

TEST_CASE("embeddings") {
  const auto q = qutrit_embedding();
  CHECK(q.affine_rank() == 2);
  CHECK(q.vertex(0) == Eigen::Vector2d(1.0, kRoot3));
  CHECK(q.vertex(1) == Eigen::Vector2d(-1.0, kRoot3));
  CHECK(q.vertex(2) == Eigen::Vector2d(0.0, -2.0 / kRoot3));
  CHECK(qubit_embedding().affine_rank() == 1);
  CHECK(standard_embedding(5).affine_rank() == 4);
  CHECK(default_embedding(3).vertices() == q.vertices());

  Eigen::MatrixXd collinear(2, 3);
  collinear << 0, 1, 2, 0, 1, 2;
  CHECK_THROWS_AS(SimplexEmbedding(collinear), InvalidArgument);
}

TEST_CASE("embed") {
  for (std::size_t n : {2u, 3u, 4u, 6u}) {
    const auto e = default_embedding(n);
    CHECK(norm_diff(embed(DiagonalDensity::pure(n, 0), e).coordinates, e.vertex(0)) == 0.0);
    CHECK(norm_diff(embed(DiagonalDensity::maximally_mixed(n), e).coordinates, e.centroid()) <= 1e-15);
  }
  const auto p = embed(DiagonalDensity({0.5, 0.3, 0.2}), qutrit_embedding());
  CHECK_THAT(p.coordinates(0), WithinAbs(0.2, 1e-15));
  CHECK_THAT(p.coordinates(1), WithinAbs(0.8 * kRoot3 - 0.4 / kRoot3, 1e-15));
  CHECK(p.barycentric == std::vector<double>{0.5, 0.3, 0.2});
  CHECK_THROWS_AS(embed(DiagonalDensity({0.5, 0.5}), qutrit_embedding()), DimensionMismatch);

  const auto centroid = qutrit_embedding().centroid();
  CHECK_THAT(centroid(0), WithinAbs(0.0, 1e-16));
  CHECK_THAT(centroid(1), WithinAbs((2.0 * kRoot3 - 2.0 / kRoot3) / 3.0, 1e-15));
}

TEST_CASE("qutrit_chart") {
  const auto x = qutrit_chart(DiagonalDensity({0.5, 0.3, 0.2}));
  CHECK_THAT(x[0], WithinAbs(0.1, 1e-15));
  CHECK_THAT(x[1], WithinAbs(0.0667, 5e-5));
  CHECK_THAT(x[1], WithinAbs(0.4 - 1.0 / 3.0, 1e-15));
}

TEST_CASE("cycle_barycenter") {
  const auto e = qutrit_embedding();
  const std::vector<Index> fixed{1};
  CHECK(norm_diff(cycle_barycenter(fixed, e).coordinates, e.vertex(1)) == 0.0);
  const std::vector<Index> pair{1, 2};
  CHECK(norm_diff(cycle_barycenter(pair, e).coordinates, (e.vertex(1) + e.vertex(2)) / 2.0) <= 1e-15);

  SECTION("the barycenter of each cycle is fixed by σ") {
    std::mt19937_64 rng(71);
    for (int k = 0; k < 30; ++k) {
      const std::size_t n = 2 + k % 5;
      const auto sigma = testing::random_permutation(n, rng);
      const auto emb = default_embedding(n);
      const auto decomposition = cycle_decomposition(sigma);
      for (const auto& c : decomposition.cycles()) {
        const auto b = cycle_barycenter(c, emb);
        CHECK(norm_diff(act_on_point(sigma, b, emb).coordinates, b.coordinates) <= 1e-14);
      }
    }
  }
}

TEST_CASE("collinearity_residual and distance_to_span") {
  CHECK(collinearity_residual(Eigen::Vector2d(0, 0), Eigen::Vector2d(2, 2), Eigen::Vector2d(1, 1)) == 0.0);
  CHECK_THAT(collinearity_residual(Eigen::Vector2d(0, 0), Eigen::Vector2d(2, 0), Eigen::Vector2d(1, 1)), WithinAbs(1.0, 1e-15));
  Eigen::MatrixXd basis(3, 1);
  basis << 1, 0, 0;
  CHECK_THAT(distance_to_span(Eigen::Vector3d(5, 3, 4), basis), WithinAbs(5.0, 1e-14));
  CHECK_THAT(distance_to_span(Eigen::Vector3d(5, 3, 4), Eigen::MatrixXd(3, 0)), WithinAbs(std::sqrt(50.0), 1e-14));
}

TEST_CASE("trajectory") {
  SECTION("single time t = 0") {
    const auto rho = DiagonalDensity({0.5, 0.3, 0.2});
    const std::vector<double> times{0.0};
    const auto traj = trajectory(rho, parse_cycles("(2 3)"), times, qutrit_embedding());
    REQUIRE(traj.points.size() == 1);
    CHECK(norm_diff(traj.points[0].coordinates, embed(rho, qutrit_embedding()).coordinates) == 0.0);
  }
  SECTION("qutrit (2 3) moves parallel to P2P3 and keeps λ1") {
    const auto e = qutrit_embedding();
    const std::vector<double> times{0.0, 0.25, 1.0, 3.0};
    const auto traj = trajectory(DiagonalDensity({0.5, 0.3, 0.2}), parse_cycles("(2 3)"), times, e);
    const Eigen::VectorXd side = e.vertex(1) - e.vertex(2);
    for (std::size_t k = 1; k < traj.points.size(); ++k) {
      const Eigen::VectorXd d = traj.points[k].coordinates - traj.points[0].coordinates;
      CHECK(std::abs(d(0) * side(1) - d(1) * side(0)) <= 1e-10 * d.norm() * side.norm());
      CHECK(traj.states[k][0] == 0.5);
    }
    CHECK(traj.collinearity_residual() <= 1e-12);
  }
  SECTION("qutrit (1 2 3) tends to the centroid") {
    const auto e = qutrit_embedding();
    const std::vector<double> times{0.0, 1.0};
    const auto traj = trajectory(DiagonalDensity({0.5, 0.3, 0.2}), parse_cycles("(1 2 3)"), times, e);
    CHECK(norm_diff(traj.limit.coordinates, e.centroid()) <= 1e-15);
  }
  SECTION("random orbits stay on a line inside ρ0 + L(c1) ⊕ ... ⊕ L(cr)") {
    std::mt19937_64 rng(72);
    for (int k = 0; k < 100; ++k) {
      const std::size_t n = 2 + k % 6;
      const auto sigma = testing::random_permutation(n, rng);
      const auto emb = default_embedding(n);
      std::vector<double> times{0.0, testing::random_time(rng), 5.0 + testing::random_time(rng)};
      std::sort(times.begin(), times.end());
      const auto traj = trajectory(testing::random_density(n, rng), sigma, times, emb);
      CHECK(traj.collinearity_residual() <= 1e-12);
      const auto dirs = cycle_direction_space(cycle_decomposition(sigma), emb);
      for (const auto& p : traj.points) CHECK(distance_to_span(p.coordinates - traj.points[0].coordinates, dirs) <= 1e-12);
      CHECK(distance_to_span(traj.limit.coordinates - traj.points[0].coordinates, dirs) <= 1e-12);
    }
  }
  SECTION("bad time grids") {
    const auto rho = DiagonalDensity({0.5, 0.5});
    const auto e = qubit_embedding();
    CHECK_THROWS_AS(trajectory(rho, parse_cycles("(1 2)"), std::vector<double>{}, e), InvalidArgument);
    CHECK_THROWS_AS(trajectory(rho, parse_cycles("(1 2)"), std::vector<double>{-1.0}, e), InvalidArgument);
    CHECK_THROWS_AS(trajectory(rho, parse_cycles("(1 2)"), std::vector<double>{1.0, 0.5}, e), InvalidArgument);
  }
}

TEST_CASE("trajectory output") {
  const std::vector<double> times{0.0, 1.0};
  const auto traj = trajectory(DiagonalDensity({1.0, 0.0}), parse_cycles("(1 2)"), times, qubit_embedding());

  std::ostringstream csv;
  write_trajectory_csv(csv, traj, true);
  std::istringstream lines(csv.str());
  std::string header, first, second, last;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  std::getline(lines, last);
  CHECK(header == "t,lambda_1,lambda_2,x_1");
  CHECK(first == "0,1,0,1");
  CHECK(second.starts_with("1,"));
  CHECK(last == "inf,0.5,0.5,0");

  // X = λ1 - λ2 decays as e^{-t} from a pure state.
  const double x1 = traj.points[1].coordinates(0);
  CHECK_THAT(x1, WithinAbs(std::exp(-1.0), 1e-15));

  std::ostringstream json;
  write_trajectory_json(json, traj, true);
  CHECK(json.str().find("\"sigma\": \"(1 2)\"") != std::string::npos);
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.25) == "0.25");
}
