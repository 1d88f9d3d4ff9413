#include "cumtree/cli.hpp"
#include <iostream>
int main(int argc, char** argv) { return cumtree::cli::main(argc, argv, std::cin, std::cout, std::cerr); }
