#include <iostream>

#include "gbpa/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gbpa::run_command(args, std::cout, std::cerr);
}
