#include <iostream>
#include <string>
#include <vector>

#include "gsys/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gsys::cli::run_command(args, std::cout, std::cerr);
}
