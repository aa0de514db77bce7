#include <iostream>

#include "fqg/cli.hpp"

int main(int argc, char** argv) { return fqg::cli::run(argc, argv, std::cout, std::cerr); }
