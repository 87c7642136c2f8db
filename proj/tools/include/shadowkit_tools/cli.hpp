#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shadowkit::cli {

enum ExitCode : int {
    kSuccess = 0,       // command ran and every verdict holds
    kVerdictFalse = 1,  // command ran and some verdict is false
    kUsage = 2,         // bad arguments or a violated precondition
    kResource = 3,      // budget exhausted, overflow, or a numeric solve that did not converge
};

// Runs one command line (without the program name), writing the report to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shadowkit::cli
