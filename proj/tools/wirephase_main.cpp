#include <iostream>

#include "wirephase/commands.hpp"

int main(int argc, char** argv) { return wirephase::run_cli(argc, argv, std::cout, std::cerr); }
