#include <iostream>

#include "boundgen/cli.hpp"

int main(int argc, char** argv) { return boundgen::cli::run(argc, argv, std::cout, std::cerr); }
