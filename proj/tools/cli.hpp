#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace compstat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on `args` (without the program name). Output for the same
/// arguments is byte-identical across runs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace compstat::cli
