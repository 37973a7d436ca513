#include <iostream>

#include "ergodic/cli.hpp"

int main(int argc, char** argv) { return ergodic::cli::main(argc, argv, std::cout, std::cerr); }
