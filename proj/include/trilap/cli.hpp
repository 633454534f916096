#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trilap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitChecksum = 3;

/// Runs the command-line tool on the given arguments (without argv[0]).
/// Data goes to `out` when the output target is "-", human diagnostics to
/// `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trilap
