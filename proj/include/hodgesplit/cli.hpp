#pragma once

// Command-line front end.  Exit codes: 0 success, 1 usage or invalid input,
// 2 a computed quantity disagreed with its cross-check.

#include <iosfwd>
#include <string>
#include <vector>

namespace hodgesplit::cli {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMismatch = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// "3", "1..9" or "-3..12" expanded into the integers it names.
std::vector<long> parse_range(const std::string& text);

}  // namespace hodgesplit::cli
