#ifndef EDSENSE_CLI_HPP
#define EDSENSE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace edsense::cli {

enum ExitCode : int {
    kOk = 0,
    kValidationFailure = 1,
    kUsageError = 2,
    kNonConvergence = 3,
};

/// Runs the command line `args` (without the program name). CSV goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edsense::cli

#endif  // EDSENSE_CLI_HPP
