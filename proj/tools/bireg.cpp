#include <iostream>

#include "bireg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const bireg::CliOutcome r = bireg::run_cli(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.code;
}
