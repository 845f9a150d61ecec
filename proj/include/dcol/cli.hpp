#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcol {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerification = 1,  ///< improper coloring, bound missed, or a run-time invariant failed
  kExitUsage = 2,         ///< bad flags, unreadable or malformed input
};

/// Runs one CLI invocation. `args` excludes the program name. The JSON report
/// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Removes the wall-time field from a JSON report (for byte comparisons).
std::string strip_wall_time(const std::string& report);

}  // namespace dcol
