#include "kraus_symm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "json.hpp"
#include "kraus_symm/cycle_notation.hpp"
#include "kraus_symm/evolution.hpp"
#include "kraus_symm/kraus.hpp"

namespace kraus_symm {

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

namespace {

struct Case {
  std::size_t index;
  Permutation sigma;
  DiagonalDensity rho0;
  double t;
  double s;
};

Case draw_case(std::size_t index, const VerifyConfig& config, std::mt19937_64& rng) {
  Permutation sigma;
  if (config.sigma) {
    sigma = *config.sigma;
  } else {
    std::uniform_int_distribution<std::size_t> degree(1, std::max<std::size_t>(1, config.max_degree));
    std::vector<Index> images(degree(rng));
    std::iota(images.begin(), images.end(), Index{0});
    std::shuffle(images.begin(), images.end(), rng);
    sigma = Permutation(std::move(images));
  }
  std::exponential_distribution<double> weight(1.0);
  std::vector<double> w(sigma.degree());
  for (double& x : w) x = weight(rng);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  std::uniform_real_distribution<double> time(0.0, 5.0);
  const double t = time(rng);
  const double s = t + time(rng);
  return {index, std::move(sigma), DiagonalDensity::normalized(std::move(w)), t, s};
}

std::string describe(const std::string& suite, const Case& c, const VerifyConfig& config, double residual) {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["case"] = c.index;
  j["seed"] = config.seed;
  j["n"] = c.sigma.degree();
  j["sigma"] = format_cycles(c.sigma);
  j["rho"] = std::vector<double>(c.rho0.values().begin(), c.rho0.values().end());
  j["t"] = c.t;
  j["s"] = c.s;
  j["perturb"] = config.perturb;
  j["residual"] = residual;
  return j.dump();
}

class Suite {
 public:
  Suite(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }

  void record(double residual, const Case& c, const VerifyConfig& config) {
    ++result_.cases;
    result_.max_residual = std::max(result_.max_residual, residual);
    if (!(residual <= result_.tolerance) && !result_.first_failure) {
      result_.first_failure = describe(result_.name, c, config, residual);
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

}  // namespace

VerifyReport run_verification(const VerifyConfig& config) {
  std::mt19937_64 rng(config.seed);
  Suite kraus("kraus_condition", config.tol);
  Suite cp("complete_positivity", config.cp_tol);
  Suite semigroup("semigroup", config.tol);
  Suite oracle("oracle_equivalence", config.tol);
  Suite orbit("orbit_system", config.tol);

  for (std::size_t k = 0; k < config.cases; ++k) {
    const Case c = draw_case(k, config, rng);
    const Subgroup group = cyclic_subgroup(c.sigma);
    auto coeffs_at = [&](double time) {
      KrausCoefficients co = coefficients(time, group.order());
      co.f += config.perturb;
      return co;
    };
    auto evolve = [&](const DiagonalDensity& rho, double time) {
      return apply_udm(KrausFamily(group, coeffs_at(time)), rho);
    };

    const KrausFamily family(group, coeffs_at(c.t));
    kraus.record(std::max(kraus_condition_residual(family), kraus_adjoint_condition_residual(family)), c, config);
    cp.record(std::max(0.0, -choi_matrix(family).min_eigenvalue()), c, config);

    const DiagonalDensity composed = evolve(evolve(c.rho0, c.t), c.s - c.t);
    semigroup.record(max_abs_diff(composed, evolve(c.rho0, c.s)), c, config);

    const DiagonalDensity brute = evolve_bruteforce(c.rho0, group, coeffs_at(c.t));
    oracle.record(max_abs_diff(evolve_closed_form(c.rho0, c.sigma, c.t), brute), c, config);
    orbit.record(orbit_system_residual(c.rho0, brute, cycle_decomposition(c.sigma)), c, config);
  }

  VerifyReport report;
  report.config = config;
  for (Suite* s : {&kraus, &cp, &semigroup, &oracle, &orbit}) report.suites.push_back(s->take());
  return report;
}

}  // namespace kraus_symm
