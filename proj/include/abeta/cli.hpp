#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abeta {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUsage = 2 };

/// Runs the `abeta` command line. `args` excludes the program name. Reports go
/// to `out` (or the file given by --out); diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// %.12g with negative zero printed as 0.
std::string format_number(double x);

} // namespace abeta
