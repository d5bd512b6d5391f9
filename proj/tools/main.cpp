#include <iostream>

#include "mfslice/cli.hpp"

int main(int argc, char** argv) { return mfslice::cli::run(argc, argv, std::cout, std::cerr); }
