#ifndef SEMIWORK_CLI_COMMANDS_HPP_
#define SEMIWORK_CLI_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace semiwork::cli {

  // Process exit codes.
  enum ExitCode : int {
    exit_yes       = 0,   // success / affirmative verdict
    exit_no        = 1,   // negative verdict
    exit_unknown   = 2,   // budget or size cap exhausted
    exit_usage     = 64,  // bad command line
    exit_malformed = 65   // unreadable or malformed input file
  };

  // Runs the command line `args` (without the program name), writing the
  // report to `out` and diagnostics to `err`. Returns the exit code.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace semiwork::cli

#endif  // SEMIWORK_CLI_COMMANDS_HPP_
