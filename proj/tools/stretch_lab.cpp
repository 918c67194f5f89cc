#include "stretchlab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return stretchlab::run_cli(argc, argv, std::cout, std::cerr); }
