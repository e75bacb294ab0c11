#include <iostream>

#include "privlabel/cli.hpp"

int main(int argc, char** argv) { return privlabel::cli::main_entry(argc, argv, std::cout, std::cerr); }
