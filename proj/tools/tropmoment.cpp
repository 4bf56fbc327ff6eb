#include <iostream>

#include "tropmoment/cli.hpp"

int main(int argc, char** argv) {
  return tropmoment::cli::main(argc, argv, std::cout, std::cerr);
}
