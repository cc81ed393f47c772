#pragma once

#include <iosfwd>

namespace polylevel {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitInput = 2, kExitOracle = 3 };

/// Entry point of the `polylevel` tool; writes reports to `out` and
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polylevel
