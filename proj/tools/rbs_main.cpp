#include <iostream>
#include <string>
#include <vector>

#include "rbs/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return rbs::run_cli(args, std::cout, std::cerr);
}
