#include <iostream>

#include "eqsc/cli.hpp"

int main(int argc, char** argv) { return eqsc::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
