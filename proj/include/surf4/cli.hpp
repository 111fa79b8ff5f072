#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surf4 {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitSelfCheckFailed = 1,
    kExitUsage = 2,
    kExitSurfaceFile = 3,
    kExitNumerical = 4,
};

/// Runs the tool; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace surf4
