#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rook::cli {

/// Runs the command-line interface on the given arguments (without argv[0]).
/// Exit code contract: 0 success / verification match, 1 verification
/// mismatch, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rook::cli
