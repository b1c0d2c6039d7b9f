#include <iostream>

#include "qdirac/cli.hpp"

int main(int argc, char** argv) { return qdirac::cli::main_entry(argc, argv, std::cout, std::cerr); }
