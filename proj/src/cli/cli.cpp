#include "kraus_symm/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "kraus_symm/cycle_notation.hpp"
#include "kraus_symm/degenerate.hpp"
#include "kraus_symm/errors.hpp"
#include "kraus_symm/evolution.hpp"
#include "kraus_symm/geometry.hpp"
#include "kraus_symm/trajectory_io.hpp"
#include "kraus_symm/verify.hpp"

namespace kraus_symm::cli {

namespace {

// Thrown for input that cannot be parsed; maps to kUsageError.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input that parses but fails numeric validation; maps to kNumericError.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_double(std::string_view text, const std::string& what) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("cannot parse " + what + " '" + std::string(text) + "' as a number");
  }
  return value;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::string_view rest(text);
  while (true) {
    auto comma = rest.find(',');
    out.push_back(parse_double(rest.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

DiagonalDensity parse_rho(const std::string& text) {
  auto values = parse_list(text, "eigenvalue");
  try {
    return DiagonalDensity::normalized(std::move(values));
  } catch (const InvalidArgument& e) {
    throw NumericError(std::string("invalid --rho: ") + e.what());
  }
}

Permutation parse_perm(const std::string& text, std::size_t n) {
  try {
    return parse_cycles(text, n);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

std::size_t max_index(const std::string& text) {
  try {
    return max_cycle_index(text);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

struct TimeOptions {
  std::string t;
  std::optional<double> start, stop;
  std::optional<std::size_t> count;
  std::string spacing = "lin";

  void attach(CLI::App* app) {
    app->add_option("--t", t, "sample time(s), comma separated");
    app->add_option("--t-start", start, "first grid time");
    app->add_option("--t-stop", stop, "last grid time");
    app->add_option("--t-count", count, "number of grid points");
    app->add_option("--spacing", spacing, "grid spacing")->check(CLI::IsMember({"lin", "log"}));
  }

  std::vector<double> resolve() const {
    std::vector<double> times;
    const bool grid = start || stop || count;
    if (!t.empty() && grid) throw UsageError("use either --t or a --t-start/--t-stop/--t-count grid");
    if (!t.empty()) {
      times = parse_list(t, "time");
    } else if (grid) {
      if (!start || !stop || !count) throw UsageError("a time grid needs --t-start, --t-stop and --t-count");
      if (*count == 0) throw UsageError("time grid has zero points");
      const double a = *start, b = *stop;
      if (spacing == "log" && !(a > 0.0 && b > 0.0)) throw UsageError("log spacing needs positive endpoints");
      for (std::size_t k = 0; k < *count; ++k) {
        const double u = *count == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(*count - 1);
        times.push_back(spacing == "log" ? a * std::pow(b / a, u) : a + (b - a) * u);
      }
    } else {
      throw UsageError("no sample time given (use --t or a grid)");
    }
    for (std::size_t k = 0; k < times.size(); ++k) {
      if (std::isnan(times[k]) || times[k] < 0.0) throw NumericError("times must be nonnegative");
      if (k > 0 && !(times[k] > times[k - 1])) throw NumericError("times must be increasing");
    }
    return times;
  }
};

// Writes to --out when given, otherwise to the default stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::vector<double> values_of(const DiagonalDensity& d) { return {d.values().begin(), d.values().end()}; }

void write_header(std::ostream& out, std::size_t n, bool with_t) {
  if (with_t) out << "t,";
  for (std::size_t i = 1; i <= n; ++i) out << (i > 1 ? "," : "") << "lambda_" << i;
  out << '\n';
}

void write_values(std::ostream& out, const DiagonalDensity& d) {
  for (std::size_t i = 0; i < d.size(); ++i) out << (i > 0 ? "," : "") << format_number(d[i]);
}

Subgroup build_group(const std::vector<std::string>& gens, std::size_t n) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(parse_perm(g, n));
  try {
    return generate_subgroup(perms, n);
  } catch (const SizeLimitExceeded& e) {
    throw NumericError(e.what());
  }
}

// --- subcommands --------------------------------------------------------------

struct EvolveArgs {
  std::string sigma;
  std::vector<std::string> gens;
  std::string rho;
  TimeOptions time;
  std::string format = "csv";
  std::string out;
};

int cmd_evolve(const EvolveArgs& a, std::ostream& out) {
  if (a.rho.empty()) throw UsageError("--rho is required");
  if (a.sigma.empty() == a.gens.empty()) throw UsageError("give exactly one of --sigma or --gen");
  const DiagonalDensity rho0 = parse_rho(a.rho);
  const std::size_t n = rho0.size();
  std::vector<std::string> gens = a.sigma.empty() ? a.gens : std::vector<std::string>{a.sigma};
  const Subgroup group = build_group(gens, n);
  const auto times = a.time.resolve();

  Sink sink(a.out, out);
  if (a.format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["generators"] = gens;
    doc["orbits"] = format_set_partition(orbit_partition(group));
    nlohmann::ordered_json samples = nlohmann::ordered_json::array();
    for (double t : times) samples.push_back({{"t", t}, {"lambda", values_of(evolve_closed_form(rho0, group, t))}});
    doc["samples"] = std::move(samples);
    *sink << doc.dump(2) << '\n';
  } else {
    write_header(*sink, n, true);
    for (double t : times) {
      *sink << format_number(t) << ',';
      write_values(*sink, evolve_closed_form(rho0, group, t));
      *sink << '\n';
    }
  }
  return kOk;
}

struct OrbitArgs {
  std::string sigma;
  std::string rho;
  TimeOptions time;
  std::string format = "csv";
  std::string out;
};

int cmd_orbit(const OrbitArgs& a, std::ostream& out, std::ostream& err) {
  if (a.rho.empty() || a.sigma.empty()) throw UsageError("--sigma and --rho are required");
  const DiagonalDensity rho0 = parse_rho(a.rho);
  const std::size_t n = rho0.size();
  const Permutation sigma = parse_perm(a.sigma, n);
  const auto times = a.time.resolve();

  const bool embedded = n == 2 || n == 3;
  if (!embedded) {
    err << "warning: no planar embedding for n=" << n << "; writing eigenvalues only\n";
  }
  const Trajectory traj = trajectory(rho0, sigma, times, default_embedding(n));
  Sink sink(a.out, out);
  if (a.format == "json") {
    write_trajectory_json(*sink, traj, embedded);
  } else {
    write_trajectory_csv(*sink, traj, embedded);
  }
  return kOk;
}

struct LimitArgs {
  std::string sigma;
  std::vector<std::string> gens;
  std::string rho;
  std::string format = "csv";
  std::string out;
};

int cmd_limit(const LimitArgs& a, std::ostream& out) {
  if (a.rho.empty()) throw UsageError("--rho is required");
  if (a.sigma.empty() == a.gens.empty()) throw UsageError("give exactly one of --sigma or --gen");
  const DiagonalDensity rho0 = parse_rho(a.rho);
  const std::size_t n = rho0.size();
  const Subgroup group = build_group(a.sigma.empty() ? a.gens : std::vector<std::string>{a.sigma}, n);
  const SetPartition orbits = orbit_partition(group);
  const BlockAverage avg = block_average(rho0, orbits);

  Sink sink(a.out, out);
  if (a.format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["orbits"] = format_set_partition(orbits);
    doc["block_values"] = avg.block_values;
    doc["limit"] = values_of(avg.assembled);
    *sink << doc.dump(2) << '\n';
  } else {
    write_header(*sink, n, false);
    write_values(*sink, avg.assembled);
    *sink << '\n';
  }
  return kOk;
}

struct EquivArgs {
  std::vector<std::string> first;
  std::vector<std::string> second;
  std::optional<std::size_t> n;
  std::string format = "text";
};

int cmd_equiv(const EquivArgs& a, std::ostream& out) {
  if (a.first.empty() || a.second.empty()) throw UsageError("both --first and --second generator lists are required");
  std::size_t n = 0;
  for (const auto* list : {&a.first, &a.second}) {
    for (const auto& g : *list) n = std::max(n, max_index(g));
  }
  if (a.n) {
    if (*a.n < n) throw UsageError("generator index exceeds --n");
    n = *a.n;
  }
  if (n == 0) throw UsageError("degree is ambiguous; pass --n");
  const Subgroup s = build_group(a.first, n);
  const Subgroup t = build_group(a.second, n);
  const bool same = equivalent(s, t);
  if (a.format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["first"] = {{"order", s.order()}, {"orbits", format_set_partition(orbit_partition(s))}};
    doc["second"] = {{"order", t.order()}, {"orbits", format_set_partition(orbit_partition(t))}};
    doc["equivalent"] = same;
    out << doc.dump(2) << '\n';
  } else {
    out << "first  order " << s.order() << " orbits " << format_set_partition(orbit_partition(s)) << '\n';
    out << "second order " << t.order() << " orbits " << format_set_partition(orbit_partition(t)) << '\n';
    out << (same ? "equivalent" : "inequivalent") << '\n';
  }
  return same ? kOk : kCheckFailed;
}

struct StabilizerArgs {
  std::string rho;
  double tol = kEqualityTolerance;
  std::string format = "text";
};

int cmd_stabilizer(const StabilizerArgs& a, std::ostream& out) {
  if (a.rho.empty()) throw UsageError("--rho is required");
  const DiagonalDensity rho0 = parse_rho(a.rho);
  Subgroup stab;
  try {
    stab = stabilizer(rho0, a.tol);
  } catch (const SizeLimitExceeded& e) {
    throw NumericError(e.what());
  }
  const SpectrumProfile profile = spectrum_profile(rho0, a.tol);
  if (a.format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = rho0.size();
    doc["multiplicity_partition"] = profile.multiplicity_partition.parts();
    doc["order"] = stab.order();
    std::vector<std::string> elements;
    for (const auto& p : stab.elements()) elements.push_back(format_cycles(p));
    doc["elements"] = elements;
    out << doc.dump(2) << '\n';
  } else {
    out << "multiplicity partition " << format_partition(profile.multiplicity_partition) << '\n';
    out << "order " << stab.order() << '\n';
    for (const auto& p : stab.elements()) out << format_cycles(p) << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  std::uint64_t seed = 1;
  std::size_t cases = 200;
  std::size_t max_n = 5;
  std::string sigma;
  std::optional<std::size_t> n;
  double perturb = 0.0;
  double tol = kAlgebraicTolerance;
  double cp_tol = kEigenvalueTolerance;
  std::string format = "text";
  std::string out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyConfig config;
  config.seed = a.seed;
  config.cases = a.cases;
  config.max_degree = a.max_n;
  config.perturb = a.perturb;
  config.tol = a.tol;
  config.cp_tol = a.cp_tol;
  if (a.max_n == 0) throw UsageError("--max-n must be positive");
  if (!a.sigma.empty()) {
    std::size_t n = a.n.value_or(max_index(a.sigma));
    if (n == 0) n = a.max_n;
    config.sigma = parse_perm(a.sigma, n);
  }
  if (!(a.tol > 0.0) || !(a.cp_tol > 0.0)) throw NumericError("tolerances must be positive");

  const VerifyReport report = run_verification(config);
  Sink sink(a.out, out);
  if (a.format == "json") {
    nlohmann::ordered_json doc;
    doc["seed"] = a.seed;
    doc["cases"] = a.cases;
    doc["max_n"] = a.max_n;
    doc["perturb"] = a.perturb;
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    for (const auto& s : report.suites) {
      nlohmann::ordered_json j{{"suite", s.name},
                               {"cases", s.cases},
                               {"max_residual", s.max_residual},
                               {"tolerance", s.tolerance},
                               {"passed", s.passed()}};
      if (s.first_failure) j["failure"] = nlohmann::ordered_json::parse(*s.first_failure);
      suites.push_back(std::move(j));
    }
    doc["suites"] = std::move(suites);
    doc["passed"] = report.passed();
    *sink << doc.dump(2) << '\n';
  } else {
    *sink << fmt::format("verify seed={} cases={} max_n={} perturb={}\n", a.seed, a.cases, a.max_n,
                         format_number(a.perturb));
    *sink << fmt::format("{:<22}{:>7}  {:<14}{:<11}{}\n", "suite", "cases", "max_residual", "tolerance", "status");
    for (const auto& s : report.suites) {
      *sink << fmt::format("{:<22}{:>7}  {:<14.3e}{:<11.0e}{}\n", s.name, s.cases, s.max_residual, s.tolerance,
                           s.passed() ? "pass" : "FAIL");
    }
    for (const auto& s : report.suites) {
      if (s.first_failure) *sink << "failing case: " << *s.first_failure << '\n';
    }
    *sink << (report.passed() ? "result: PASS" : "result: FAIL") << '\n';
  }
  return report.passed() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kraus semigroups of the symmetric group acting on diagonal density matrices"};
  app.require_subcommand(1);

  EvolveArgs evolve;
  auto* evolve_cmd = app.add_subcommand("evolve", "closed-form orbit rho(t) at the given times");
  evolve_cmd->add_option("--sigma", evolve.sigma, "permutation in cycle notation, e.g. \"(1 2 3)(4 5)\"");
  evolve_cmd->add_option("--gen", evolve.gens, "subgroup generators in cycle notation");
  evolve_cmd->add_option("--rho", evolve.rho, "initial eigenvalues, comma separated");
  evolve.time.attach(evolve_cmd);
  evolve_cmd->add_option("--format", evolve.format)->check(CLI::IsMember({"csv", "json"}));
  evolve_cmd->add_option("--out", evolve.out, "output path (default stdout)");

  OrbitArgs orbit;
  auto* orbit_cmd = app.add_subcommand("orbit", "trajectory with simplex coordinates and limit point");
  orbit_cmd->add_option("--sigma", orbit.sigma, "permutation in cycle notation");
  orbit_cmd->add_option("--rho", orbit.rho, "initial eigenvalues, comma separated");
  orbit.time.attach(orbit_cmd);
  orbit_cmd->add_option("--format", orbit.format)->check(CLI::IsMember({"csv", "json"}));
  orbit_cmd->add_option("--out", orbit.out, "output path (default stdout)");

  LimitArgs limit;
  auto* limit_cmd = app.add_subcommand("limit", "limit state of the orbit");
  limit_cmd->add_option("--sigma", limit.sigma, "permutation in cycle notation");
  limit_cmd->add_option("--gen", limit.gens, "subgroup generators in cycle notation");
  limit_cmd->add_option("--rho", limit.rho, "initial eigenvalues, comma separated");
  limit_cmd->add_option("--format", limit.format)->check(CLI::IsMember({"csv", "json"}));
  limit_cmd->add_option("--out", limit.out, "output path (default stdout)");

  EquivArgs equiv;
  auto* equiv_cmd = app.add_subcommand("equiv", "decide whether two subgroups give the same evolution");
  equiv_cmd->add_option("-S,--first", equiv.first, "generators of the first subgroup");
  equiv_cmd->add_option("-T,--second", equiv.second, "generators of the second subgroup");
  equiv_cmd->add_option("-n,--n", equiv.n, "degree (default: largest index mentioned)");
  equiv_cmd->add_option("--format", equiv.format)->check(CLI::IsMember({"text", "json"}));

  StabilizerArgs stab;
  auto* stab_cmd = app.add_subcommand("stabilizer", "permutations acting trivially on rho");
  stab_cmd->add_option("--rho", stab.rho, "eigenvalues, comma separated");
  stab_cmd->add_option("--tol", stab.tol, "absolute tolerance for equal eigenvalues");
  stab_cmd->add_option("--format", stab.format)->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "randomized residual checks");
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--cases", verify.cases);
  verify_cmd->add_option("--max-n", verify.max_n, "largest degree drawn");
  verify_cmd->add_option("--sigma", verify.sigma, "fix the permutation instead of drawing it");
  verify_cmd->add_option("-n,--n", verify.n, "degree for --sigma");
  verify_cmd->add_option("--perturb", verify.perturb, "add this to f in every family (fault injection)");
  verify_cmd->add_option("--tol", verify.tol, "tolerance for algebraic residuals");
  verify_cmd->add_option("--cp-tol", verify.cp_tol, "tolerance for negative Choi eigenvalues");
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--out", verify.out, "output path (default stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (evolve_cmd->parsed()) return cmd_evolve(evolve, out);
    if (orbit_cmd->parsed()) return cmd_orbit(orbit, out, err);
    if (limit_cmd->parsed()) return cmd_limit(limit, out);
    if (equiv_cmd->parsed()) return cmd_equiv(equiv, out);
    if (stab_cmd->parsed()) return cmd_stabilizer(stab, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericError;
  }
  return kUsageError;
}

}  // namespace kraus_symm::cli
