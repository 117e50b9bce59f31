#include <iostream>
#include <string>
#include <vector>

#include "nqga_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nqga::cli::run_cli(args, std::cout, std::cerr);
}
