#include <iostream>

#include "arctan_bounds/cli.hpp"

int main(int argc, char** argv) {
  return arctan_bounds::cli::run_cli(argc, argv, std::cout, std::cerr);
}
