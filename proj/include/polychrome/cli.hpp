#pragma once

#include <iosfwd>
#include <vector>
#include <string>

namespace polychrome::cli {

enum ExitCode : int {
    ok = 0,
    check_failed = 1,   // a verifier ran and rejected its input
    usage = 2,
    io_error = 3,
    format_error = 4,
    precondition = 5,
    sizing = 6,
};

/// Worker-count override read before any parallel work.
inline constexpr const char* kThreadsEnv = "POLYCHROME_THREADS";

/// Runs one CLI invocation. Results go to `out`; failures are reported on `err`
/// as a single JSON object {"error": {"kind", "message", "exit_code"}}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polychrome::cli
