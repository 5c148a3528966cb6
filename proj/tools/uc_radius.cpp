#include <iostream>

#include "ucr/cli.hpp"

int main(int argc, char** argv) { return ucr::cli::run(argc, argv, std::cout, std::cerr); }
