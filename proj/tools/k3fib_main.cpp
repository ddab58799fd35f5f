#include <iostream>
#include <string>
#include <vector>

#include "k3fib/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return k3fib::run_cli(args, std::cout, std::cerr);
}
