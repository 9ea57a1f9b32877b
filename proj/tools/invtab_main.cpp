#include <iostream>

#include "invtab/cli.hpp"

int main(int argc, char** argv) { return invtab::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
