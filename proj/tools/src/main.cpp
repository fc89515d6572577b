#include <iostream>

#include "cuspsyz/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cuspsyz::run_cli(args, std::cout, std::cerr);
}
