#include <iostream>

#include "divclass/cli/app.hpp"

int main(int argc, char** argv) { return divclass::cli::run_cli(argc, argv, std::cout, std::cerr); }
