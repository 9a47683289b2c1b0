#include <iostream>
#include <string>
#include <vector>

#include "cuboid/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cuboid::cli::run(std::move(args), std::cout, std::cerr);
}
