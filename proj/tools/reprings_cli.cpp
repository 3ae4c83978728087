#include <iostream>
#include <vector>

#include "reprings/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return reprings::run_cli(args, std::cout, std::cerr);
}
