#include <iostream>
#include <string>
#include <vector>

#include "krank/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return krank::run(args, std::cout, std::cerr);
}
