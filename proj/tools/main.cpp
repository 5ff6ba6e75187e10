#include <iostream>

#include "covlab/cli.hpp"

int main(int argc, char** argv) { return covlab::cli::main_entry(argc, argv, std::cout, std::cerr); }
