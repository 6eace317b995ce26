#include <iostream>

#include "setopt/cli.hpp"

int main(int argc, char** argv) {
  return setopt::cli::run(argc, argv, std::cout, std::cerr);
}
