#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chroma::cli {

/// Runs the command line `args` (program name excluded). Returns the process
/// exit code: 0 success, 1 a mathematical check failed, 2 bad input.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace chroma::cli
