#pragma once

#include <iosfwd>

namespace superconf::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

// Parses argv and runs one subcommand. Reports go to `out` unless --output
// names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superconf::cli
