#include <iostream>

#include "opdiv/cli.hpp"

int main(int argc, char** argv) {
  return opdiv::cli::run(argc, argv, std::cout, std::cerr);
}
