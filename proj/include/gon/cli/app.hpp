#pragma once

// The `gon` command-line driver. Exit status: 0 success, 1 a verification
// or theorem hypothesis failed, 2 usage, parse or input-domain error,
// 3 an operation budget was exhausted.

#include <ostream>

namespace gon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gon::cli
