#include <iostream>
#include <string>
#include <vector>

#include "lian/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lian::cli::run(args, std::cout, std::cerr);
}
