#pragma once

#include <iosfwd>

namespace flagcoh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// Parses argv, runs one subcommand and writes its report to out.
// Diagnostics go to err. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flagcoh::cli
