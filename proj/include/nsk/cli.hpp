#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nsk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitHypothesis = 2;
inline constexpr int kExitUsage = 64;

struct Options {
  bool color = false;  // ANSI colour in human-readable output
};

/// Runs `nsk <args...>` (args exclude the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& options = {});

}  // namespace nsk::cli
