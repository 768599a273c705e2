#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fakeweather::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitFormat = 3,
  kExitIo = 4,
};

// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fakeweather::cli
