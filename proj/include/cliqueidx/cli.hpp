#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliqueidx::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kUsageError = 64,
};

/// Runs the command line `args` (without the program name). Graph input
/// not named by a path is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cliqueidx::cli
