#include <iostream>

#include "pvc4/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pvc4::cli_main(args, std::cout, std::cerr);
}
