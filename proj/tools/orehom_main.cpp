#include <iostream>
#include <string>
#include <vector>

#include "orehom/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return orehom::run_cli(args, std::cout);
}
