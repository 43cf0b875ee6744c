#include <iostream>
#include <string>
#include <vector>

#include "matroid_xf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return matroid_xf::run_command(args, std::cout, std::cerr);
}
