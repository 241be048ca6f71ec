#include <iostream>

#include "spink/cli.hpp"

int main(int argc, char** argv) {
    return spink::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
