#include <iostream>
#include <vector>

#include "skewbez/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skewbez::run_cli(args, std::cout, std::cerr);
}
