#include <iostream>
#include <vector>

#include "encheck/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return encheck::run_cli(args, std::cout, std::cerr);
}
