#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gwall {

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 success, 1 bad input, 2 computation failed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwall
