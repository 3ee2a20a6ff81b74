#include <iostream>

#include "clusterkit/cli.hpp"

int main(int argc, char** argv) { return clusterkit::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
