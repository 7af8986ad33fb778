#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace topoctl {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Reads
/// TOPOCTL_MAX_POINTS from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Known ids closest to `unknown` by edit distance, at most three.
std::vector<std::string> suggestions(const std::string& unknown, const std::vector<std::string>& known);

}  // namespace topoctl
