#include <iostream>

#include "datrtag/cli.hpp"

int main(int argc, char** argv) { return datrtag::cli::run(argc, argv, std::cout, std::cerr); }
