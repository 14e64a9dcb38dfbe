#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // verdict-negative: refuted arrow, expansion failure, ...
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramsey::cli
