#include <iostream>
#include <string>
#include <vector>

#include "reed/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return reed::cli::run(args, std::cin, std::cout, std::cerr);
}
