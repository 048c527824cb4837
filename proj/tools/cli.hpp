#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdim::cli {

inline constexpr const char* tool_name = "mdim";
inline constexpr const char* tool_version = "0.1.0";

/// Exit codes shared by every command.
enum Exit : int { success = 0, failure = 1, usage = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mdim::cli
