#include <iostream>

#include "irrbase/cli.hpp"

int main(int argc, char** argv) { return irrbase::cli::run(argc, argv, std::cout, std::cerr); }
