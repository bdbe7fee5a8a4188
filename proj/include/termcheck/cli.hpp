#pragma once

#include <ostream>

namespace termcheck {

/// Exit status of the command-line front end.
enum ExitCode : int {
    kExitTerminating = 0,
    kExitNonTerminating = 1,
    kExitFault = 2,
    kExitUsage = 3,
};

/// Runs `termcheck <program-file> --query <atom> ...` and writes the rendered
/// verdict to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace termcheck
