#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dagconvex {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitError = 2,
};

/// Runs one CLI invocation. `args` excludes the program name. Normal output
/// goes to `out` (or the file named by -o), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dagconvex
