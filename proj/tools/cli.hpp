#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace deckforge::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

/// Runs one command line (without the program name). `in` backs `--input -`.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace deckforge::cli
