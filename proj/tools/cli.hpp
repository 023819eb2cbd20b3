#ifndef MONDRIAN_TOOLS_CLI_HPP_
#define MONDRIAN_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace mondrian::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kCaseFailure = 3,
  kLimit = 4,
};

// Runs the command line `args` (without the program name). Data goes to
// `out`, diagnostics and progress to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// Worker count from an explicit flag value (0 = unset), then the
// MONDRIAN_THREADS environment variable, then the machine core count.
int ResolveWorkers(int flag_value);

// Accepts plain integers, 1e7 and 10^7.
unsigned long long ParseCount(const std::string& text);

}  // namespace mondrian::cli

#endif  // MONDRIAN_TOOLS_CLI_HPP_
