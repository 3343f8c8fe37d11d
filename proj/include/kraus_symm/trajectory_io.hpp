#pragma once

// Trajectory export.
//
// CSV: header `t,lambda_1,...,lambda_n[,x_1,...,x_d]`, one row per sample,
// then a final row for the limit state with t written as `inf`. Numbers use
// the shortest decimal form that round-trips.
//
// JSON: {"n", "sigma", "cycles", "partition", "vertices", "samples": [{"t",
// "lambda", "x"}], "limit": {"lambda", "x"}}. Indices are 1-based. Without
// coordinates "vertices" is null and "x" is omitted.

#include <ostream>
#include <string>

#include "kraus_symm/geometry.hpp"

namespace kraus_symm {

std::string format_number(double x);

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, bool with_coordinates);
void write_trajectory_json(std::ostream& out, const Trajectory& traj, bool with_coordinates);

}  // namespace kraus_symm
