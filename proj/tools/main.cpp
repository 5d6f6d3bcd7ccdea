#include <iostream>

#include "syzstab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return syzstab::run(args, std::cout, std::cerr);
}
