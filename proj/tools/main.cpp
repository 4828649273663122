#include <cstdio>
#include <string>
#include <vector>

#include "hopfcyc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    hopfcyc::CliResult result = hopfcyc::runCli(std::move(args));
    std::fputs(result.output.c_str(), stdout);
    return result.exitCode;
}
