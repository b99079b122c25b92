#include <iostream>

#include "polydecomp/cli/app.hpp"

int main(int argc, char** argv) { return polydecomp::cli::run(argc, argv, std::cout, std::cerr); }
