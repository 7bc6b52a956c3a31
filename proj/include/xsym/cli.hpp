#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xsym {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,            // success or certified
    kExitRefuted = 1,       // not totally nonnegative
    kExitInapplicable = 2,  // inapplicable input or partial verification
    kExitUsage = 3,
    kExitIo = 4,
};

/// Runs the command line `args` (args[0] is the program name), writing
/// normal output to `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xsym
