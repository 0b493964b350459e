#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace goldbach::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one CLI invocation. args excludes the program name. Returns the
/// process exit code: 0 success, 2 usage error, 3 mathematical-consistency
/// failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace goldbach::cli
