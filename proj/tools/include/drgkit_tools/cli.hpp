#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drgkit::tools {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kAnalysisFailure = 2, kMismatch = 3 };

/// Runs `drgkit <subcommand> ...`; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drgkit::tools
