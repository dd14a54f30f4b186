// cli.hpp - the qsuff command line: compute, generate, verify, sweep.
// Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.

#pragma once

#include <ostream>

namespace qsuff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsuff::cli
