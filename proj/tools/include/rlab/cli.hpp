#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rlab::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kComputation = 2,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rlab::cli
