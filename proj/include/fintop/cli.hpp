#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fintop {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 1,  // bad notation, bad flags, out-of-range arguments
  kExitDisagreement = 2,
  kExitLiftFails = 3,
  kExitIoError = 4,
};

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fintop
