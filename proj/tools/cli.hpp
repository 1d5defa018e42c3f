#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tspread::cli {

enum ExitCode : int {
  kOk = 0,
  kClaimFailed = 1,
  kUsage = 2,
  kGuardRefused = 3,
};

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tspread::cli
