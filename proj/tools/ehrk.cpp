#include <iostream>

#include "ehrk/cli.hpp"

int main(int argc, char** argv) { return ehrk::run_cli(argc, argv, std::cout, std::cerr); }
