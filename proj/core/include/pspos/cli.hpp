#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pspos {

/// Runs the command line surface against the given streams and returns
/// the process exit code: 0 success (degeneracies are reported in-band),
/// 1 I/O failure, 2 usage or parameter-validation error.
///
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pspos
