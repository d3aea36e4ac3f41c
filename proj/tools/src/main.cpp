#include <iostream>

#include "reeskit/cli/commands.hpp"

int main(int argc, char** argv) { return reeskit::cli::run(argc, argv, std::cout, std::cerr); }
