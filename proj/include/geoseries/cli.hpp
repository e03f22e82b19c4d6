#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geoseries::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

/// Runs one `geoseries` command. `args` excludes the program name.
/// Returns 0 on success, 1 on a verification mismatch or I/O failure, and 2
/// on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace geoseries::cli
