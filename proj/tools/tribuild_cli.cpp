#include <iostream>

#include "tribuild/cli.hpp"

int main(int argc, char** argv) { return tribuild::cli::run(argc, argv, std::cout, std::cerr); }
