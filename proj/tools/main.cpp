#include <iostream>
#include <string>
#include <vector>

#include "curvecliff/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return curvecliff::cli::run(args, std::cout, std::cerr);
}
