#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigcolor::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kImproper = 2,
  kInvalidEdgeLaw = 3,
  kSizeGuard = 4,
  kInternal = 5,
};

/// Runs one command line (without the program name). Reports go to `out` as
/// `key value` lines, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigcolor::cli
