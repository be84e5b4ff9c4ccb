#pragma once

// The command-line driver: gen-basis, verify and dims.

#include <ostream>
#include <string>
#include <vector>

namespace ctow {

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitInternal = 3 };

// Levels accepted by gen-basis and verify unless CELLULAR_TOWERS_MAX_LEVEL
// says otherwise.
int default_level_bound(const std::string& algebra);

// Runs the tool on the given arguments (without the program name) and
// returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctow
