#include <iostream>

#include "termcheck/cli.hpp"

int main(int argc, char** argv) { return termcheck::run_cli(argc, argv, std::cout, std::cerr); }
