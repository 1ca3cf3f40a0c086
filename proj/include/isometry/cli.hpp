#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isometry::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kVerdictFalse = 1,
  kUsageError = 2,
  kDomainError = 3,
};

/// Runs one subcommand. `args` excludes the program name. Results go to `out`
/// (or the --output file); failures print one JSON object line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isometry::cli
