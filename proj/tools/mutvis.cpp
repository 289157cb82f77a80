#include <iostream>

#include "mutvis/cli.hpp"

int main(int argc, char** argv) { return mutvis::run_cli(argc, argv, std::cout, std::cerr); }
