#include <iostream>
#include <string>
#include <vector>

#include "trilap/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return trilap::run_cli(args, std::cout, std::cerr);
}
