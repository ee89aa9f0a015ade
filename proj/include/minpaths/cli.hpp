#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minpaths {

/// Process exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDomain = 2,
  /// A minimal-path bound or gap-function check failed.
  kExitBoundViolation = 3,
};

/// Runs the tool with `args` (args[0] is the program name). `-` for an
/// input or output path refers to `in` / `out`.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace minpaths
