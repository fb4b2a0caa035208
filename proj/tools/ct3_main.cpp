#include <iostream>
#include <string>
#include <vector>

#include "ct3/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ct3::cli::run(args, std::cout, std::cerr);
}
