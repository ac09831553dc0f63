#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace growgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCostGuard = 3;

/// Largest graph the grow and converge commands will build.
inline constexpr std::size_t kMaxGrowVertices = 20000;

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace growgraph::cli
