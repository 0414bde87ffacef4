#include <iostream>

#include "floorzeta/cli.hpp"

int main(int argc, char** argv) {
    return floorzeta::cli::run(argc, argv, std::cout, std::cerr);
}
