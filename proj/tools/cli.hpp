#pragma once

#include <iosfwd>

namespace ngcheck::cli {

enum ExitCode : int {
  kPass = 0,
  kFailure = 1,  // proven bound violated, bad input, or I/O error
  kCounterexample = 2,
};

/// Parses argv and runs one subcommand (info, scan, verify, plotdata).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ngcheck::cli
