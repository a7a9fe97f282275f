#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fintop::cli {

// Exit-code contract of the `fintop` tool.
inline constexpr int kVerdictTrue = 0;
inline constexpr int kVerdictFalse = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kInvariantViolation = 3;

// `args` excludes the program name. Verdict documents go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fintop::cli
