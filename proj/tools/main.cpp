#include <iostream>
#include <string>
#include <vector>

#include "symclass/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return symclass::run_cli(args, std::cout, std::cerr);
}
