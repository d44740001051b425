#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symbal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitBudget = 65;
inline constexpr int kExitInternal = 70;

/// Parse `args` (without the program name), run one command and write its
/// report to `out`. Diagnostics go to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symbal::cli
