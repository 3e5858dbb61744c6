#pragma once

#include <iosfwd>

namespace betscan::cli {

/// Exit codes of the betscan command line.
enum ExitCode : int {
    kSuccess = 0,
    kInputError = 1,
    kNoAdmissibleWindow = 2,
    kUsageError = 64,
};

/// Entry point shared by main() and the CLI tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace betscan::cli
