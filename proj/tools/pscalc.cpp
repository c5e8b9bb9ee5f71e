#include <iostream>
#include <string>
#include <vector>

#include "pscalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pscalc::cli::run(args, std::cout, std::cerr);
}
