#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mtvrp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `mtvrp` tool; args excludes the program name.
// Subcommands: generate, solve, check, bench, adapters demo.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtvrp
