#include <iostream>

#include "otoric/cli.hpp"

int main(int argc, char** argv) { return otoric::run_cli(argc, argv, std::cout, std::cerr); }
