#include <iostream>

#include "hodgesplit/cli.hpp"

int main(int argc, char** argv) { return hodgesplit::cli::run(argc, argv, std::cout, std::cerr); }
