#include <map>

#include "catch_amalgamated.hpp"
#include "kraus_symm/cycle_notation.hpp"
#include "kraus_symm/degenerate.hpp"
#include "kraus_symm/errors.hpp"
#include "test_support.hpp"

using namespace kraus_symm;

namespace {

// Literal σ ρ σ^{-1} = ρ check with dense matrices.
bool fixes_dense(const Permutation& sigma, const DiagonalDensity& rho) {
  const Eigen::MatrixXd r = testing::dense_permutation(sigma);
  const Eigen::MatrixXd d = testing::dense_diag(rho);
  return (r * d * r.transpose() - d).cwiseAbs().maxCoeff() <= 1e-14;
}

std::uint64_t multiplicity_factorial_product(const DiagonalDensity& rho) {
  std::map<double, std::uint64_t> counts;
  for (double x : rho.values()) ++counts[x];
  std::uint64_t product = 1;
  for (const auto& [value, m] : counts) product *= factorial(m);
  return product;
}

// Whether the parts of mu can be grouped into bins summing to the parts of
// lambda, tried over every assignment of parts to bins.
bool groups_into(const std::vector<std::size_t>& mu, const std::vector<std::size_t>& lambda) {
  std::vector<std::size_t> bins(lambda.size(), 0);
  std::function<bool(std::size_t)> place = [&](std::size_t k) {
    if (k == mu.size()) return bins == lambda;
    for (std::size_t b = 0; b < bins.size(); ++b) {
      bins[b] += mu[k];
      const bool ok = bins[b] <= lambda[b] && place(k + 1);
      bins[b] -= mu[k];
      if (ok) return true;
    }
    return false;
  };
  return place(0);
}

}  // namespace

TEST_CASE("spectrum_profile") {
  const auto p = spectrum_profile(DiagonalDensity({0.3, 0.4, 0.3}));
  CHECK(p.multiplicity_partition == IntegerPartition({2, 1}));
  CHECK(p.blocks == std::vector<std::vector<Index>>{{0, 2}, {1}});
}

TEST_CASE("acts_trivially") {
  const auto rho = DiagonalDensity({0.4, 0.3, 0.3});
  CHECK(acts_trivially(Permutation::identity(3), rho));
  CHECK(acts_trivially(parse_cycles("(2 3)"), rho));
  CHECK_FALSE(acts_trivially(parse_cycles("(1 2)", 3), rho));

  SECTION("agrees with the dense check exhaustively on Σ4") {
    std::mt19937_64 rng(81);
    for (int k = 0; k < 20; ++k) {
      const auto r = testing::random_degenerate_density(4, rng);
      for (const auto& sigma : testing::all_permutations(4)) CHECK(acts_trivially(sigma, r) == fixes_dense(sigma, r));
    }
  }
  SECTION("generic states are fixed only by the identity") {
    const auto generic = DiagonalDensity({0.4, 0.3, 0.2, 0.1});
    for (const auto& sigma : testing::all_permutations(4)) CHECK(acts_trivially(sigma, generic) == sigma.is_identity());
  }
}

TEST_CASE("stabilizer") {
  CHECK(stabilizer(DiagonalDensity({0.4, 0.3, 0.2, 0.1})).order() == 1);
  CHECK(stabilizer(DiagonalDensity::maximally_mixed(4)).order() == 24);
  const auto s = stabilizer(DiagonalDensity({0.4, 0.3, 0.3}));
  CHECK(s == cyclic_subgroup(parse_cycles("(2 3)")));

  SECTION("order is the product of multiplicity factorials") {
    std::mt19937_64 rng(82);
    for (int k = 0; k < 30; ++k) {
      const std::size_t n = 1 + k % 6;
      const auto rho = testing::random_degenerate_density(n, rng);
      std::size_t dense_count = 0;
      for (const auto& sigma : testing::all_permutations(n)) dense_count += fixes_dense(sigma, rho) ? 1 : 0;
      const auto stab = stabilizer(rho);
      CHECK(stab.order() == multiplicity_factorial_product(rho));
      CHECK(stab.order() == dense_count);
    }
  }
  CHECK_THROWS_AS(stabilizer(DiagonalDensity::maximally_mixed(5), kEqualityTolerance, 4), SizeLimitExceeded);
}

TEST_CASE("is_subpartition") {
  CHECK(is_subpartition(IntegerPartition({2, 2}), IntegerPartition({2, 2})));
  CHECK(is_subpartition(IntegerPartition({1, 1, 1, 1}), IntegerPartition({3, 1})));
  CHECK_FALSE(is_subpartition(IntegerPartition({3, 1}), IntegerPartition({2, 2})));
  CHECK(is_subpartition(IntegerPartition({2, 1, 1}), IntegerPartition({2, 2})));
  CHECK_THROWS_AS(is_subpartition(IntegerPartition({2}), IntegerPartition({2, 1})), InvalidArgument);

  SECTION("matches exhaustive grouping for n ≤ 7") {
    for (std::size_t n = 1; n <= 7; ++n) {
      for (const auto& mu : integer_partitions(n)) {
        for (const auto& lambda : integer_partitions(n)) {
          CHECK(is_subpartition(mu, lambda) == groups_into(mu.parts(), lambda.parts()));
        }
      }
    }
  }
}

TEST_CASE("nontrivial_directions") {
  SECTION("generic state: every non-identity type") {
    const auto dirs = nontrivial_directions(DiagonalDensity({0.4, 0.3, 0.2, 0.1}));
    CHECK(dirs.size() == integer_partitions(4).size() - 1);
  }
  SECTION("maximally mixed: none") {
    CHECK(nontrivial_directions(DiagonalDensity::maximally_mixed(4)).empty());
  }
  SECTION("(.4,.3,.3): the types some conjugate of which moves index 1 into {2,3}") {
    const auto rho = DiagonalDensity({0.4, 0.3, 0.3});
    std::set<IntegerPartition> expected;
    for (const auto& sigma : testing::all_permutations(3)) {
      if (!fixes_dense(sigma, rho)) expected.insert(partition_of(sigma));
    }
    const auto dirs = nontrivial_directions(rho);
    CHECK(std::set<IntegerPartition>(dirs.begin(), dirs.end()) == expected);
    CHECK(dirs == std::vector<IntegerPartition>{IntegerPartition({3}), IntegerPartition({2, 1})});
  }
}
