#include <iostream>
#include <string>
#include <vector>

#include "pqt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pqt::cli::run(args, std::cout, std::cerr);
}
