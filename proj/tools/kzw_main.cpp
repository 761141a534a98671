#include <iostream>

#include "kzw/cli.hpp"

int main(int argc, char** argv) { return kzw::cli::run(argc, argv, std::cout, std::cerr); }
