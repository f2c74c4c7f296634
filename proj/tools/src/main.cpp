#include <iostream>

#include "hermcode_cli/commands.hpp"

int main(int argc, char** argv) { return hermcode::cli::run_cli(argc, argv, std::cout, std::cerr); }
