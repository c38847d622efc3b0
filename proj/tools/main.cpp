#include <iostream>
#include <string>
#include <vector>

#include "kostant/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kostant::cli::run(args, std::cout, std::cerr);
}
