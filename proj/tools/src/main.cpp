#include <iostream>

#include "flagstar_cli/cli.hpp"

int main(int argc, char** argv) { return flagstar::cli::run(argc, argv, std::cout, std::cerr); }
