#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace halflog::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kVerificationFailed = 3,
};

/// Parses the arguments (without the program name), runs the subcommand and
/// returns the exit status.  Results go to `out` or --out, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace halflog::cli
