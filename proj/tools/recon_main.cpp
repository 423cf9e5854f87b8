#include <iostream>

#include "recon/cli.hpp"

int main(int argc, char** argv) { return recon::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
