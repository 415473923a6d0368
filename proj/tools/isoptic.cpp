#include <iostream>

#include "isoptic/cli.hpp"

int main(int argc, char** argv) { return isoptic::run_cli(argc, argv, std::cout, std::cerr); }
