#ifndef STREAMFIX_TOOLS_CLI_H_
#define STREAMFIX_TOOLS_CLI_H_

#include <ostream>

namespace streamfix::cli {

enum ExitCode : int {
  kAffirmative = 0,
  kNegative = 1,
  kUsageError = 2,
  kBoundExceeded = 3,
};

// Runs one command line. `env_bound` is the value of STREAMFIX_BOUND or null.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err, const char* env_bound);

}  // namespace streamfix::cli

#endif  // STREAMFIX_TOOLS_CLI_H_
