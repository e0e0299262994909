#include <iostream>

#include "altalg/cli.hpp"

int main(int argc, char** argv) { return altalg::cli::run({argv + 1, argv + argc}, std::cout, std::cerr); }
