#include <iostream>

#include "mollify/cli.hpp"

int main(int argc, char** argv) { return mollify::cli_main(argc, argv, std::cout, std::cerr); }
