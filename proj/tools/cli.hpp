#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratiocert::cli {

enum ExitCode : int { kOk = 0, kChecksFailed = 1, kUsage = 2, kBudget = 3 };

/// Runs the command line `args` (program name excluded) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratiocert::cli
