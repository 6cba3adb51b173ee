#include <iostream>
#include <string>
#include <vector>

#include "hrl/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hrl::cli::run(args, std::cout, std::cerr);
}
