#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cactus::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

/// Run one command line; args excludes the program name.  Artifacts go to
/// `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cactus::cli
