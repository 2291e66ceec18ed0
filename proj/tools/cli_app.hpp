#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dpc::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInvalidArgs = 2,
  kExitCapacity = 3,
};

/// Parses args (args[0] is the program name) and runs one subcommand. Results
/// go to out, diagnostics to err. Reads DPC_PRECISION for the default
/// precision in bits.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpc::cli
