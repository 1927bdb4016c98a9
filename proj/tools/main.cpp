#include <iostream>

#include "awroots/cli.hpp"

int main(int argc, char** argv) {
  return awroots::cli::main_impl(argc, argv, std::cout, std::cerr);
}
