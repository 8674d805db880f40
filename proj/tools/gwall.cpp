#include <iostream>
#include <string>
#include <vector>

#include "gwall/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gwall::run_cli(args, std::cout, std::cerr);
}
