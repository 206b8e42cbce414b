#pragma once

#include <string>
#include <vector>

namespace bireg {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitInputError = 3;

struct CliOutcome {
    std::string out;
    std::string err;
    int code = kExitOk;
};

// args excludes the program name: {"betti", "file.txt", "--json"}.
CliOutcome run_cli(const std::vector<std::string>& args);

} // namespace bireg
