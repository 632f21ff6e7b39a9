#include <iostream>

#include "eigencomp/cli.hpp"

int main(int argc, char** argv) {
    return eigencomp::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
