#include <iostream>
#include <string>
#include <vector>

#include "prytz/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return prytz::run_cli(args, std::cout, std::cerr);
}
