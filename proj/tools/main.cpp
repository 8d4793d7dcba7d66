#include <iostream>
#include <string>
#include <vector>

#include "nilcover/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nilcover::cli::run(args, std::cout, std::cerr);
}
