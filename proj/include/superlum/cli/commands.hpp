#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superlum::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitNumerical = 3,
};

/// Entry point of the `superlum` tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superlum::cli
