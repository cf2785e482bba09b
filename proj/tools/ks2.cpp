#include <iostream>

#include "ks2/cli.hpp"

int main(int argc, char** argv) {
  return ks2::cli::run(argc, argv, std::cout, std::cerr);
}
