#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orthorep {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kExitOk = 0, kExitUsage = 1, kExitVerificationFailed = 2 };

/// Runs one `orthorep` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orthorep
