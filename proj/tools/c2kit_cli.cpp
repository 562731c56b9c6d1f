#include <iostream>

#include "c2kit/cli.hpp"

int main(int argc, char** argv) { return c2kit::run(argc, argv, std::cout, std::cerr); }
