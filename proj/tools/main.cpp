#include <iostream>

#include "starsys/cli.hpp"

int main(int argc, char** argv) { return starsys::cli::run(argc, argv, std::cout, std::cerr); }
