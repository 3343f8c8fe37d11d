#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kraus_symm::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // verify breach, or equiv found the maps inequivalent
  kUsageError = 2,   // unparsable arguments or cycle notation, degree mismatch
  kNumericError = 3, // invalid state, negative time, enumeration cap exceeded
};

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kraus_symm::cli
