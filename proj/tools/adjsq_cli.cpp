#include <iostream>

#include "adjsq/cli.hpp"

int main(int argc, char** argv) { return adjsq::cli::run_cli(argc, argv, std::cout, std::cerr); }
