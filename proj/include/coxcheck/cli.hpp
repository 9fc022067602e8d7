#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxcheck::cli {

/// Runs one command line (args excludes the program name) and returns the
/// process exit code: 0 verified, 1 hypothesis failed, 2 input error,
/// 3 contradiction.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxcheck::cli
