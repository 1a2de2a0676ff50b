#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordvec::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyViolation = 1,
  kInputError = 2,
  kIncoherent = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordvec::cli
