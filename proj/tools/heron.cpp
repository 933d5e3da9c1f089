#include <iostream>

#include "heron/cli.hpp"

int main(int argc, char** argv) { return heron::cli::run(argc, argv, std::cout, std::cerr); }
