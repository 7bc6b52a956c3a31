#include <iostream>
#include <string>
#include <vector>

#include "xsym/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return xsym::run_cli(args, std::cout, std::cerr);
}
