#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace frobcov::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitUsage = 64;

/// Runs one command line. args[0] is the program name. Normal output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobcov::cli
