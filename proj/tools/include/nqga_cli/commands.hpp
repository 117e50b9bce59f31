#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nqga::cli {

enum ExitCode : int {
  kOk = 0,         // solved / verified optimal / bench completed
  kUnsolved = 2,   // ran, but the best arrangement still has conflicts
  kUsage = 64,
  kDataError = 65,  // parse, validation or configuration error
  kIoError = 74,
};

/// Entry point shared by the executable and the tests. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nqga::cli
