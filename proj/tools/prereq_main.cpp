#include <iostream>

#include "prereq/cli.hpp"

int main(int argc, char** argv) { return prereq::cli::run(argc, argv, std::cout, std::cerr); }
