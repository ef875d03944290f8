#include <iostream>
#include <string>
#include <vector>

#include "mdzv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mdzv::run_cli(args, std::cout, std::cerr);
}
