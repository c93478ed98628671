#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lrs {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitDegenerate = 2, kExitAssumption = 3, kExitLimit = 4 };

/// The lrs-growth command line. Reports go to `out` (or --output), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrs
