#include <iostream>

#include "flagcoh/cli.hpp"

int main(int argc, char** argv) {
  return flagcoh::cli::run(argc, argv, std::cout, std::cerr);
}
