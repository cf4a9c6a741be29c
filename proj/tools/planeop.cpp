#include <iostream>
#include <string>
#include <vector>

#include "planeop/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return planeop::cli::run(args, std::cout, std::cerr);
}
