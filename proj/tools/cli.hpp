#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace linlef::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerdictFalse = 1,
    kInvalidInput = 2,
    kInternalFailure = 3,
};

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace linlef::cli
