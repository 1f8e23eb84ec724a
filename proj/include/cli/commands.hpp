#pragma once

#include <iosfwd>

namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the vlsbench tool; callable in-process.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cli
