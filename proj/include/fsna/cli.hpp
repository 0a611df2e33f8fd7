#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fsna {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDataError = 1,  // bad input document, rejected records, failed computation
  kExitUsage = 2,      // bad flags or parameters
};

/// Runs the fsna command line. `args` excludes the program name. Normal
/// output goes to `out`, diagnostics and warnings to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fsna
