#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sde::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kSingular = 2,
  kForbidden = 3,
  kMismatch = 4,
};

/// Runs one command line (without the program name). Reports go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sde::cli
