#pragma once
// Entry point shared by the gridtorus executable and the CLI tests.

#include <iosfwd>
#include <string>
#include <vector>

namespace gridtorus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitViolations = 3;
inline constexpr int kExitUsage = 64;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gridtorus::cli
