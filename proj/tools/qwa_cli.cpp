#include <iostream>

#include "qwa/cli.hpp"

int main(int argc, char** argv) { return qwa::run_cli(argc, argv, std::cout, std::cerr); }
