#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bridgekit::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kMismatch = 2, kParse = 3, kResource = 4 };

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics and diffs to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bridgekit::cli
