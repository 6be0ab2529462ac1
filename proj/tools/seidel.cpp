#include <iostream>

#include "seidel_cli.hpp"

int main(int argc, char** argv) {
    return seidel::cli::run(argc, argv, {std::cout, std::cerr, std::cin});
}
