#include <iostream>

#include "polylevel/cli.hpp"

int main(int argc, char** argv) { return polylevel::run_cli(argc, argv, std::cout, std::cerr); }
