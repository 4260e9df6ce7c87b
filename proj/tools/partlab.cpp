#include <iostream>
#include <string>
#include <vector>

#include "partlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return partlab::cli::run(args, std::cin, std::cout, std::cerr);
}
