#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fahp::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kInput = 2,
    kUndefined = 3,
    kOracleBreach = 4,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fahp::cli
