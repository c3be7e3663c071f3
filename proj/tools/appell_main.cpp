#include <iostream>

#include "appell/cli.hpp"

int main(int argc, char** argv) { return appell::cli::run(argc, argv, std::cout, std::cerr); }
