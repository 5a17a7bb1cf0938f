#include "quiverlab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return quiverlab::cli::run(argc, argv, std::cout, std::cerr); }
