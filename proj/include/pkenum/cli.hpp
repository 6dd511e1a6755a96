#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pkenum::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationMismatch = 1,
    kUsageError = 2,
    kUnsupportedParameter = 3,
    kNumericFailure = 4,  // precision or solver failure
    kCacheError = 5,
};

// Runs the command line `args` (without the program name). Results go to
// `out` (or to --out), diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace pkenum::cli
