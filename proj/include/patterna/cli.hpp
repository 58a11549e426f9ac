#pragma once

#include <string>
#include <vector>

namespace patterna::cli {

/// Exit codes: 0 positive answer / success, 1 negative answer (not
/// exhibitable, a check failed), 2 usage or input error.
struct CommandResult {
    int exit_code = 0;
    std::string payload;      // standard output: JSON (DIMACS for `dimacs`)
    std::string diagnostics;  // standard error
};

/// Runs one command line. `args` excludes the program name.
[[nodiscard]] CommandResult run(const std::vector<std::string>& args);

}  // namespace patterna::cli
