#include <iostream>

#include "zetalab/cli.hpp"

int main(int argc, char** argv) {
  return zetalab::run_cli(argc, argv, std::cout, std::cerr);
}
