#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcube::cli {

enum ExitCode : int {
  kSuccess = 0,
  kWitnessFound = 1,
  kUsageError = 2,
  kGuardExceeded = 3,
  kInternalError = 4,
};

/// Runs one qcube subcommand. `args` excludes the program name. Reports go
/// to `out` as JSON; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcube::cli
