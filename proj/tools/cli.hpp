#pragma once

#include <iosfwd>

namespace lotvns::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Entry point of the `lotvns` tool: generate | solve | oracle | bench.
/// Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lotvns::cli
