#include <iostream>

#include "lozenge/cli.hpp"

int main(int argc, char** argv) { return lozenge::run(argc, argv, std::cout, std::cerr); }
