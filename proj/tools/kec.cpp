#include <iostream>

#include "kec/cli.hpp"

int main(int argc, char** argv) { return kec::cli::run(argc, argv, std::cout, std::cerr); }
