#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wordrel::cli {

enum ExitCode : int {
  kOk = 0,
  kParseOrDomain = 2,
  kCapExceeded = 3,
  kInternal = 4,
};

// Runs one command line (without the program name). Records go to `out`,
// diagnostics and the error record to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordrel::cli
