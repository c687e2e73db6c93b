#include <iostream>

#include "trinion/cli.hpp"

int main(int argc, char** argv) { return trinion::run_cli(argc, argv, std::cout, std::cerr); }
