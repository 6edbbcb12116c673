#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lowwafom {

inline constexpr const char* kToolName = "lowwafom";
inline constexpr const char* kToolVersion = "0.1.0";

/// Parses `args` (without the program name), runs the subcommand, and returns
/// the process exit code. Diagnostics go to `err`, results without an output
/// file to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lowwafom
