#include <cmath>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "kraus_symm/cycle_notation.hpp"
#include "kraus_symm/errors.hpp"
#include "kraus_symm/kraus.hpp"
#include "test_support.hpp"

using namespace kraus_symm;
using Catch::Matchers::WithinAbs;
using kraus_symm::testing::dense_diag;
using kraus_symm::testing::dense_permutation;
using kraus_symm::testing::random_density;

namespace {

Subgroup klein() { return generate_subgroup({parse_cycles("(1 2)", 4), parse_cycles("(3 4)")}, 4); }

// Σ_α K_α ρ K_α^† with each K built from scratch.
Eigen::MatrixXd dense_channel(const Subgroup& s, const KrausCoefficients& c, const Eigen::MatrixXd& rho) {
  Eigen::MatrixXd out = c.g * c.g * rho;
  for (const auto& sigma : s.elements()) {
    if (sigma.is_identity()) continue;
    const Eigen::MatrixXd r = dense_permutation(sigma);
    out += c.f * c.f * r * rho * r.transpose();
  }
  return out;
}

}  // namespace

TEST_CASE("coefficients") {
  SECTION("t = 0") {
    const auto c = coefficients(0.0, 3);
    CHECK(c.g == 1.0);
    CHECK(c.f == 0.0);
  }
  SECTION("t = inf, m = 2") {
    const auto c = coefficients(std::numeric_limits<double>::infinity(), 2);
    CHECK_THAT(c.g, WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
    CHECK_THAT(c.f, WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
  }
  SECTION("t = ln 2, m = 2 against long double evaluation") {
    const auto c = coefficients(std::numbers::ln2, 2);
    const long double e = std::exp(-std::numbers::ln2_v<long double>);
    const long double g = std::sqrt((1.0L + e) / 2.0L);
    const long double f = std::sqrt((1.0L - e) / 2.0L);
    CHECK_THAT(g, WithinAbs(std::sqrt(3.0L) / 2.0L, 1e-18));
    CHECK_THAT(f, WithinAbs(0.5L, 1e-18));
    CHECK_THAT(c.g, WithinAbs(static_cast<double>(g), 1e-15));
    CHECK_THAT(c.f, WithinAbs(static_cast<double>(f), 1e-15));
    CHECK(c.trace_residual() <= 1e-15);
  }
  SECTION("trace condition over a grid") {
    for (std::size_t m : {1u, 2u, 3u, 6u, 24u, 720u}) {
      for (double t : {0.0, 1e-12, 1e-6, 0.3, 1.0, 7.0, 50.0, 1e9}) CHECK(coefficients(t, m).trace_residual() <= 1e-15);
    }
  }
  SECTION("invalid arguments") {
    CHECK_THROWS_AS(coefficients(-0.1, 2), InvalidArgument);
    CHECK_THROWS_AS(coefficients(std::nan(""), 2), InvalidArgument);
    CHECK_THROWS_AS(coefficients(1.0, 0), InvalidArgument);
  }
}

TEST_CASE("build_family") {
  SECTION("trivial subgroup is the identity channel") {
    const auto fam = build_family(generate_subgroup({}, 3), 2.0);
    REQUIRE(fam.size() == 1);
    CHECK(fam.dense_members()[0] == Eigen::MatrixXd::Identity(3, 3));
    CHECK(kraus_condition_residual(fam) == 0.0);
    const auto rho = DiagonalDensity({0.5, 0.3, 0.2});
    CHECK(testing::same_values(apply_udm(fam, rho).values(), rho.values()));
  }
  SECTION("⟨(1 2)⟩ in Σ2 at t = 1") {
    const auto fam = build_family(cyclic_subgroup(parse_cycles("(1 2)")), 1.0);
    CHECK(fam.size() == 2);
    const auto& c = fam.coefficients();
    CHECK_THAT(c.g * c.g + c.f * c.f, WithinAbs(1.0, 1e-15));
  }
  SECTION("Klein group at t = 0.7") {
    const auto fam = build_family(klein(), 0.7);
    REQUIRE(fam.size() == 4);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(4, 4);
    for (const auto& k : fam.dense_members()) sum += k * k.transpose();
    CHECK((sum - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(kraus_condition_residual(fam) <= 1e-14);
    CHECK(kraus_adjoint_condition_residual(fam) <= 1e-14);
  }
  SECTION("order mismatch") {
    CHECK_THROWS_AS(KrausFamily(klein(), coefficients(1.0, 2)), DimensionMismatch);
  }
}

TEST_CASE("apply_udm") {
  SECTION("qubit closed form") {
    const auto s = cyclic_subgroup(parse_cycles("(1 2)"));
    const auto rho = DiagonalDensity({0.8, 0.2});
    for (double t : {0.0, 0.1, 1.0, 10.0}) {
      const auto out = apply_udm(build_family(s, t), rho);
      const double e = std::exp(-t);
      CHECK_THAT(out[0], WithinAbs(e * 0.8 + (1 - e) / 2, 1e-14));
      CHECK_THAT(out[1], WithinAbs(e * 0.2 + (1 - e) / 2, 1e-14));
    }
  }
  SECTION("Klein group against dense brute force") {
    const auto rho = DiagonalDensity({0.4, 0.3, 0.2, 0.1});
    const auto fam = build_family(klein(), 1.0);
    const Eigen::MatrixXd oracle = dense_channel(klein(), fam.coefficients(), dense_diag(rho));
    const auto out = apply_udm(fam, rho);
    for (Eigen::Index i = 0; i < 4; ++i) CHECK_THAT(out[static_cast<std::size_t>(i)], WithinAbs(oracle(i, i), 1e-13));
  }
  SECTION("random subgroups against dense brute force") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 50; ++k) {
      const std::size_t n = 1 + k % 6;
      const auto s = generate_subgroup({testing::random_permutation(n, rng), testing::random_permutation(n, rng)}, n);
      const auto rho = random_density(n, rng);
      const auto fam = build_family(s, testing::random_time(rng));
      const Eigen::MatrixXd oracle = dense_channel(s, fam.coefficients(), dense_diag(rho));
      const auto out = apply_udm(fam, rho);
      CHECK(std::abs(out.trace() - 1.0) <= 1e-13);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK_THAT(out[i], WithinAbs(oracle(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)), 1e-13));
      }
    }
  }
}

TEST_CASE("kraus_condition_residual") {
  SECTION("every built family passes") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const auto& s : testing::two_generated_subgroups(n)) {
        for (double t : {0.0, 0.5, 2.0, 20.0}) CHECK(kraus_condition_residual(build_family(s, t)) <= 1e-12);
      }
    }
  }
  SECTION("doubling f leaves residual 3(m-1)f²") {
    for (double t : {0.3, 1.0, 4.0}) {
      auto c = coefficients(t, 4);
      const double f = c.f;
      c.f *= 2.0;
      const double expected = 3.0 * 3.0 * f * f;
      CHECK_THAT(kraus_condition_residual(KrausFamily(klein(), c)), WithinAbs(expected, 1e-14));
      CHECK(expected > 0.0);
    }
  }
  SECTION("group-algebra terms") {
    const auto a = parse_cycles("(1 2 3)");
    const double w = 1.0 / std::sqrt(3.0);
    const std::vector<GroupAlgebraTerm> terms{{Permutation::identity(3), w},
                                              {a, {0.0, w}},
                                              {a.inverse(), std::polar(w, 0.7)}};
    CHECK(coefficient_condition_residual(terms) <= 1e-15);
    CHECK(kraus_condition_residual(std::span<const GroupAlgebraTerm>(terms)) <= 1e-15);
    const std::vector<GroupAlgebraTerm> bad{{Permutation::identity(3), 1.0}, {a, 0.5}};
    CHECK_THAT(coefficient_condition_residual(bad), WithinAbs(0.25, 1e-15));
  }
}

TEST_CASE("Choi matrix") {
  SECTION("identity channel, n = 2, is rank one with trace 2") {
    const auto choi = choi_matrix(build_family(generate_subgroup({}, 2), 1.0));
    const auto ev = choi.eigenvalues();
    CHECK_THAT(choi.entries().trace().real(), WithinAbs(2.0, 1e-15));
    CHECK_THAT(ev(3), WithinAbs(2.0, 1e-14));
    for (int i = 0; i < 3; ++i) CHECK_THAT(ev(i), WithinAbs(0.0, 1e-14));
  }
  SECTION("Kraus form agrees with the block definition") {
    std::mt19937_64 rng(51);
    for (int k = 0; k < 10; ++k) {
      const std::size_t n = 2 + k % 3;
      const auto s = generate_subgroup({testing::random_permutation(n, rng)}, n);
      const auto fam = build_family(s, testing::random_time(rng));
      const auto members = fam.dense_members();
      const auto by_blocks = choi_of_map(n, [&](const Eigen::MatrixXcd& x) {
        Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(x.rows(), x.cols());
        for (const auto& m : members) y += m.cast<std::complex<double>>() * x * m.transpose();
        return y;
      });
      CHECK((choi_matrix(fam).entries() - by_blocks.entries()).cwiseAbs().maxCoeff() <= 1e-14);
    }
  }
  SECTION("small examples are PSD") {
    const auto c2 = choi_matrix(build_family(cyclic_subgroup(parse_cycles("(1 2)")), 1.0));
    CHECK(c2.entries().rows() == 4);
    CHECK(c2.min_eigenvalue() >= -1e-10);
    CHECK(c2.hermiticity_residual() <= 1e-15);
    const auto c3 = choi_matrix(build_family(cyclic_subgroup(parse_cycles("(1 2 3)")), 0.5));
    CHECK(c3.entries().rows() == 9);
    CHECK(c3.min_eigenvalue() >= -1e-10);
  }
  SECTION("transpose map is not completely positive") {
    for (std::size_t n : {2u, 3u}) {
      const auto choi = choi_of_map(n, [](const Eigen::MatrixXcd& x) { return Eigen::MatrixXcd(x.transpose()); });
      CHECK_THAT(choi.min_eigenvalue(), WithinAbs(-1.0, 1e-14));
      CHECK_FALSE(is_completely_positive(choi));
    }
  }
  SECTION("every built family is completely positive") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& s : testing::two_generated_subgroups(n)) {
        for (double t : {0.0, 0.5, 2.0, 20.0}) CHECK(is_completely_positive(build_family(s, t)));
      }
    }
  }
}
