#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gallery::cli {

/// Exit codes of the command-line tool.
enum Exit : int {
    kYes = 0,
    kNo = 1,
    kBadInput = 2,
    kOracleDisagrees = 3,
};

/// Runs one command (`solve`, `csp`, `gen`, `viz`); `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gallery::cli
