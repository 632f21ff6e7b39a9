#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eigencomp {

/// Exit statuses of run_cli.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitInvalidInput = 3,
    kExitResourceLimit = 4,
    kExitClassification = 5,
};

/// Runs one command; args exclude the program name. Results go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace eigencomp
