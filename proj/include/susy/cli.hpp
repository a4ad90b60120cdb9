#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace susy::cli {

/// Process exit codes.
enum ExitCode : int {
    kPass = 0,
    kInputError = 2,        // bad flags, invalid parameters, violated preconditions
    kIdentityFailure = 3,   // a residual exceeded its tolerance
    kNumericalFailure = 4,  // convergence or conditioning failure
};

/// Runs the command line (args excludes the program name) and returns the
/// exit code. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace susy::cli
