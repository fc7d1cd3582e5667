#include "resum/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return resum::run_cli(argc, argv, std::cout, std::cerr);
}
