#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arexit {

enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 2,     // bad flags, configuration or parameter domain
  kExitNumerical = 3,  // e.g. every Monte Carlo trial censored
};

/// Entry point of the `arexit` tool. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arexit
