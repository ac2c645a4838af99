#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dpfd::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // library error, or `iso` on non-isomorphic input
inline constexpr int kUsage = 2;

// Runs one command line; args[0] is the program name.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace dpfd::cli
