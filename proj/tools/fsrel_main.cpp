#include <iostream>
#include <string>
#include <vector>

#include "fsrel/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fsrel::run_cli(args, std::cout, std::cerr);
}
