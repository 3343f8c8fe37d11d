#include "kraus_symm/trajectory_io.hpp"

#include <cmath>

#include <fmt/format.h>

#include "json.hpp"
#include "kraus_symm/cycle_notation.hpp"

namespace kraus_symm {

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // folds -0 into 0
  return fmt::format("{}", x);
}

namespace {

void write_row(std::ostream& out, const std::string& t, const DiagonalDensity& state, const SimplexPoint& point,
               bool with_coordinates) {
  out << t;
  for (double v : state.values()) out << ',' << format_number(v);
  if (with_coordinates) {
    for (Eigen::Index k = 0; k < point.coordinates.size(); ++k) out << ',' << format_number(point.coordinates(k));
  }
  out << '\n';
}

std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, bool with_coordinates) {
  out << "t";
  for (std::size_t i = 1; i <= traj.limit_state.size(); ++i) out << ",lambda_" << i;
  if (with_coordinates) {
    for (std::size_t k = 1; k <= traj.embedding.ambient_dimension(); ++k) out << ",x_" << k;
  }
  out << '\n';
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    write_row(out, format_number(traj.times[s]), traj.states[s], traj.points[s], with_coordinates);
  }
  write_row(out, "inf", traj.limit_state, traj.limit, with_coordinates);
}

void write_trajectory_json(std::ostream& out, const Trajectory& traj, bool with_coordinates) {
  using nlohmann::ordered_json;
  ordered_json doc;
  const auto decomposition = cycle_decomposition(traj.sigma);
  doc["n"] = traj.sigma.degree();
  doc["sigma"] = format_cycles(traj.sigma);
  ordered_json cycles = ordered_json::array();
  for (const auto& c : decomposition.cycles()) {
    ordered_json cycle = ordered_json::array();
    for (Index i : c) cycle.push_back(i + 1);
    cycles.push_back(std::move(cycle));
  }
  doc["cycles"] = std::move(cycles);
  doc["partition"] = decomposition.lengths();
  if (with_coordinates) {
    ordered_json vertices = ordered_json::array();
    for (std::size_t i = 0; i < traj.embedding.vertex_count(); ++i) vertices.push_back(to_vector(traj.embedding.vertex(i)));
    doc["vertices"] = std::move(vertices);
  } else {
    doc["vertices"] = nullptr;
  }
  ordered_json samples = ordered_json::array();
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    ordered_json sample;
    sample["t"] = traj.times[s];
    sample["lambda"] = std::vector<double>(traj.states[s].values().begin(), traj.states[s].values().end());
    if (with_coordinates) sample["x"] = to_vector(traj.points[s].coordinates);
    samples.push_back(std::move(sample));
  }
  doc["samples"] = std::move(samples);
  ordered_json limit;
  limit["lambda"] = std::vector<double>(traj.limit_state.values().begin(), traj.limit_state.values().end());
  if (with_coordinates) limit["x"] = to_vector(traj.limit.coordinates);
  doc["limit"] = std::move(limit);
  out << doc.dump(2) << '\n';
}

}  // namespace kraus_symm
