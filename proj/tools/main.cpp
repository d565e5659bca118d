#include <iostream>

#include "spinboost/cli.hpp"

int main(int argc, char** argv) {
    return spinboost::cli::run_cli(argc, argv, std::cout, std::cerr);
}
