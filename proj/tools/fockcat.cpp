#include <iostream>

#include "fockcat/cli.hpp"

int main(int argc, char** argv) { return fockcat::cli::run_cli(argc, argv, std::cout, std::cerr); }
