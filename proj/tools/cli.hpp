#pragma once

#include <ostream>
#include <span>
#include <string>

namespace cvqkd::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNotSecure = 1,
  kInvalidArguments = 2,
  kNumericalFailure = 3,
};

// Runs the command line `args` (args[0] is the program name). Results go to
// `out` unless --output is given; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cvqkd::cli
