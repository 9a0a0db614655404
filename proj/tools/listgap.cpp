#include "listgap/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return listgap::cli::main(argc, argv, std::cout, std::cerr); }
