#include <iostream>
#include <string>
#include <vector>

#include "psl2z/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return psl2z::cli::run(args, std::cout, std::cerr);
}
