#pragma once

#include <cstddef>
#include <iosfwd>

namespace trinion {

/// Process exit codes.
enum ExitCode : int { kSuccess = 0, kUsage = 1, kInput = 2, kContradiction = 3 };

/// Largest ambient dimension the `oracle` subcommand accepts.
inline constexpr std::size_t kOracleMaxDim = 9;

/// Entry point of the `trinion` command-line tool; returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trinion
