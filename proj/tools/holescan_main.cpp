#include <iostream>
#include <string>
#include <vector>

#include "holescan/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return holescan::run_cli(std::move(args), std::cout, std::cerr);
}
