// main.cpp — edgedecay command-line entry point

#include <iostream>

#include "edgedecay/cli.hpp"

int main(int argc, char** argv) { return edgedecay::run_cli(argc, argv, std::cout, std::cerr); }
