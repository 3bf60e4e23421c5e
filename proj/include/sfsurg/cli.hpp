#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sfsurg {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,  // verify-table found a mismatch set other than the pinned one
  kExitUsage = 2,
};

// Runs the command line `args` (without the program name). Normal output
// goes to `out`; diagnostics are single lines on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sfsurg
