#pragma once

#include <iosfwd>

namespace cochad {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kResource = 3 };

/// Entry point of the `cochad` tool. Results go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cochad
