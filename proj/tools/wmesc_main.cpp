#include <iostream>

#include "wmesc/cli.hpp"

int main(int argc, char** argv) {
  return wmesc::run_cli(argc, argv, std::cout, std::cerr);
}
