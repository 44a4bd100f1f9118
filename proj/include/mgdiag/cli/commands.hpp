#ifndef MGDIAG_CLI_COMMANDS_HPP
#define MGDIAG_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mgdiag::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitPrecondition = 2,
  kExitInternal = 3,
};

/// Runs one command line (without the program name) and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgdiag::cli

#endif  // MGDIAG_CLI_COMMANDS_HPP
