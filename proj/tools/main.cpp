#include <iostream>
#include <string>
#include <vector>

#include "rsemi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rsemi::run_cli(args, std::cout, std::cerr);
}
