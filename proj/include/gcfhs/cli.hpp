#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gcfhs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

/// Largest length accepted by commands that build O(nu^2) correlation tables.
inline constexpr std::uint64_t kDeskBudgetLength = 20000;

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out` unless --out is given; diagnostics go to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcfhs::cli
