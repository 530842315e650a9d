#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fusion::cli {

inline constexpr int kExitClean = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name, e.g.
/// {"component", "--ring", "uqsu11", "--json"}. Returns the process exit code:
/// 0 clean, 1 violations or mismatches, 2 usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits a comma-separated label list, ignoring commas nested in () or [].
std::vector<std::string> split_labels(const std::string& text);

}  // namespace fusion::cli
