#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modrep::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 counterexample found (verify), 2 usage or precondition error.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace modrep::cli
