#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ghostkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

/// args excludes the program name. JSON goes to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghostkit::cli
