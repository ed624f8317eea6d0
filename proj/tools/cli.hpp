#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sumfree::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFalseVerdict = 1;
inline constexpr int kInputError = 2;
inline constexpr int kResourceCap = 3;

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumfree::cli
