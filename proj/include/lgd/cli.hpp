#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgd::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInfeasible = 2,
  kResourceCap = 3,
  kCheckFailed = 4,
};

/// Runs one command line (without the program name). Outputs without a path go
/// to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads a flat "key = value" file into flag tokens {"--key", "value", ...}.
/// '#' starts a comment line; "key = true" becomes a bare flag.
std::vector<std::string> read_config_file(const std::string& path);

}  // namespace lgd::cli
