#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eop {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitMismatch = 1, kExitUsage = 2 };

/// Runs the tool in-process. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`. Never throws; returns 0, 1 or 2.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eop
