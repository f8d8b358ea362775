#include "cubesob/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cubesob::run_cli(argc, argv, std::cout, std::cerr); }
