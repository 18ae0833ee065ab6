#include <iostream>
#include <string>
#include <vector>

#include "oplus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return oplus::cli::run(args, std::cout, std::cerr);
}
