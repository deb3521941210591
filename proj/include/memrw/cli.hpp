#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace memrw::cli {

/// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

/// Entry point behind the `memrw` binary. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace memrw::cli
