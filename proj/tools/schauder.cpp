#include <iostream>

#include "schauder/cli.hpp"

int main(int argc, char** argv) { return schauder::cli::main(argc, argv, std::cout, std::cerr); }
