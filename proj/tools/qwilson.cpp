#include <iostream>
#include <string>
#include <vector>

#include "qwilson/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qwilson::run_cli(args, std::cout, std::cerr);
}
