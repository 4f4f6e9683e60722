#include "squidsim/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return squidsim::run_cli(argc, argv, std::cout, std::cerr); }
