#include <iostream>

#include "linematch/cli.hpp"

int main(int argc, char** argv) { return linematch::cli::run(argc, argv, std::cout, std::cerr); }
