#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lincert {

inline constexpr int kExitUsage = 64;

/// Runs one CLI invocation. `args` excludes the program name. Output goes to
/// `out`, diagnostics to `err`; the return value is the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lincert
