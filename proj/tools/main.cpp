#include <iostream>
#include <string>
#include <vector>

#include "bunkbed/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bunkbed::cli::run(args, std::cout, std::cerr);
}
