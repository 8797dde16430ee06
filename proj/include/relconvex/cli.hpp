#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relconvex::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kTrue = 0,
  kInputError = 1,
  kNumericalFailure = 2,
  kFalse = 3,
};

/// Parses and runs one invocation. `args` excludes the program name.
/// Reports go to `out`, diagnostics and usage text to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relconvex::cli
