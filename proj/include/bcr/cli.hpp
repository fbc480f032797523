#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bcr {

/// Runs the command-line tool on already-split arguments (program name
/// excluded), writing results to `out` and diagnostics to `err`.
/// Exit codes: 0 success, 1 usage error, 2 data error (parse failure,
/// unreachable route, unwritable output).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcr
