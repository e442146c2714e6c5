#include <iostream>

#include "zerokit/cli.hpp"

int main(int argc, char** argv) { return zk::cli::main(argc, argv, std::cout, std::cerr); }
