#include <iostream>

#include "mgd/cli/app.hpp"

int main(int argc, char** argv) { return mgd::cli::run(argc, argv, std::cout, std::cerr); }
