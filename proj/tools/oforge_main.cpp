#include <iostream>
#include <string>
#include <vector>

#include "oforge/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return oforge::run_cli(args, std::cout, std::cerr);
}
