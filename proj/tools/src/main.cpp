#include <iostream>
#include <string>
#include <vector>

#include "knotcab_cli/run.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return knotcab::cli::run(std::move(args), std::cout, std::cerr);
}
