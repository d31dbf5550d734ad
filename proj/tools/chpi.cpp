#include <iostream>

#include "chpi/cli.hpp"

int main(int argc, char** argv) { return chpi::cli::main_entry(argc, argv, std::cout, std::cerr); }
