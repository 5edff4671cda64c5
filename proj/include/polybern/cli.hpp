#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polybern::cli {

/// Runs the polybern command line on the given arguments (without argv[0]).
/// All results go to `out`, diagnostics to `err`. Returns the process exit
/// code: 0 success (including conjecture findings), 1 identity-check
/// failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polybern::cli
