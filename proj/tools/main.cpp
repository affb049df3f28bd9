#include "cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return optforce::cli::run_cli(argc, argv, std::cout, std::cerr);
}
