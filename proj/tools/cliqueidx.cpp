#include <iostream>
#include <string>
#include <vector>

#include "cliqueidx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cliqueidx::cli::run(args, std::cin, std::cout, std::cerr);
}
