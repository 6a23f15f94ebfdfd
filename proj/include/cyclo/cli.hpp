#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cyclo/error.hpp"

namespace cyclo::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitMismatch = 2,
  kExitResourceCap = 3,
  kExitBadInput = 4,
};

int exit_code_for(ErrorCode code);

/// Entry point of the `cyclo` tool. `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclo::cli
