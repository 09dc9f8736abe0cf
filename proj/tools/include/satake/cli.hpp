#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace satake::cli {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;  // bad input, or a failed check in `report`
inline constexpr int kExitBudget = 2;
inline constexpr int kExitInternal = 3;

/// Runs the command line `args` (without the program name). JSON (or a table
/// with --table) goes to `out`; errors are printed to `out` as
/// {"error": ..., "kind": ...}.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace satake::cli
