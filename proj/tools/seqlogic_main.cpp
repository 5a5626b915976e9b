#include <iostream>

#include "seqlogic/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return seqlogic::run_cli(args, std::cin, std::cout, std::cerr);
}
