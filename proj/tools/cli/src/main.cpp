#include <iostream>

#include "critorbit/cli/app.hpp"

int main(int argc, char** argv) { return critorbit::cli::run(argc, argv, std::cout, std::cerr); }
