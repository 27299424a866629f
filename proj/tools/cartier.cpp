#include <iostream>

#include "cartier/cli.hpp"

int main(int argc, char** argv) { return cartier::run_cli(argc, argv, std::cout, std::cerr); }
