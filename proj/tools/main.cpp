#include <iostream>
#include <string>
#include <vector>

#include "sbasis/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sbasis::runCli(args, std::cin, std::cout, std::cerr);
}
