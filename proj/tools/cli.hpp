#pragma once

#include <iosfwd>

namespace illume::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kInputError = 2,
    kIoError = 3,
};

/// Runs one subcommand. Payload goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace illume::cli
