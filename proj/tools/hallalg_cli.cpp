#include <iostream>

#include "hallalg/cli.hpp"

int main(int argc, char** argv) { return hallalg::cli::run(argc, argv, std::cout, std::cerr); }
