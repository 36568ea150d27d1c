#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flowlab::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kSizeGuard = 3 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flowlab::cli
