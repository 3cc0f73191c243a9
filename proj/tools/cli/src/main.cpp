#include "hafd/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hafd::cli::run_cli(argc, argv, std::cout, std::cerr); }
