#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sev::cli {

enum ExitCode : int {
    kAffirmative = 0,
    kNegative = 1,
    kInputError = 2,
    kUnsupported = 3,
    kOracleFailure = 4,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sev::cli
