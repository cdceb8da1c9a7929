#include <iostream>

#include "eopkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eop::run_cli(args, std::cout, std::cerr);
}
