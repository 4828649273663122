#pragma once

#include <string>
#include <vector>

namespace hopfcyc {

struct CliResult {
    int exitCode = 0;    // 0: all checks pass, 1: a mathematical check failed,
                         // 2: input error
    std::string output;  // JSON (plus an aligned table for homology verbs)
};

/// The batch front door.  args excludes the program name.
CliResult runCli(std::vector<std::string> args);

}  // namespace hopfcyc
