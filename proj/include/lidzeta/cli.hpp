#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lidzeta {

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Runs the `lidzeta` command line. args excludes the program name.
/// Never throws; every failure maps to an exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lidzeta
