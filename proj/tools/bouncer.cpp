#include <iostream>

#include "bouncer/cli/commands.hpp"

int main(int argc, char** argv) { return bouncer::cli::run_cli(argc, argv, std::cout, std::cerr); }
