#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lierig {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
};

/// Runs one lierig invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lierig
