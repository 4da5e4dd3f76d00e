#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return areaflow::cli::main(argc, argv, std::cout, std::cerr); }
