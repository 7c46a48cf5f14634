#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kwise::cli {

enum ExitCode : int { kOk = 0, kFinding = 1, kUsage = 2, kInternal = 3 };

/// Parses and runs one command. Reports go to `out` (or the --out file),
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kwise::cli
