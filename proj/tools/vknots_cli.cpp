#include <iostream>
#include <string>
#include <vector>

#include "vknots/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return vknots::cli::run(std::move(args), std::cout, std::cerr);
}
