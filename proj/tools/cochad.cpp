#include <iostream>

#include "cochad/cli.hpp"

int main(int argc, char** argv) { return cochad::run_cli(argc, argv, std::cout, std::cerr); }
