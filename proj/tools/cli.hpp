#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace overlap::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyMismatch = 1,
  kInputError = 2,
  kCapExceeded = 3,
};

/// Runs `overlap <args...>` (args excludes the program name), writing to the
/// given streams. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace overlap::cli
