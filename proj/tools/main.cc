#include <cstdlib>
#include <iostream>

#include "cli.h"

int main(int argc, char** argv) {
  return streamfix::cli::Run(argc, argv, std::cout, std::cerr,
                             std::getenv("STREAMFIX_BOUND"));
}
