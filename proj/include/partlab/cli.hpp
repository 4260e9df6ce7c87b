#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partlab::cli {

enum ExitCode : int {
    ok = 0,
    verification_failed = 1,
    invalid_input = 2,
};

/// Runs one invocation. `args` includes the program name. The document is
/// written to `out` (or --output) only once it is complete; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace partlab::cli
