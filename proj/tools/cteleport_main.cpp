#include <iostream>

#include "cteleport/cli.hpp"

int main(int argc, char** argv) {
  return cteleport::cli::main_with_args(argc, argv, std::cout, std::cerr);
}
