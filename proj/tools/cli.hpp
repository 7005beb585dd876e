#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surdcf::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kSchemaVersion = 1;

/// Runs the command line `args` (args[0] is the program name) and returns the
/// exit code. Records go to `out` unless --out names a file; diagnostics go
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surdcf::cli
