#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wpc {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitCounterexample = 1,
  kExitUsage = 2,
};

/// Runs the command line `args` (without the program name). Graph6 or JSON
/// lines go to `out`; usage text and progress go to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wpc
