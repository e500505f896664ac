#include <iostream>

#include "starconf/cli.hpp"

int main(int argc, char** argv) { return starconf::run_cli(argc, argv, std::cout, std::cerr); }
