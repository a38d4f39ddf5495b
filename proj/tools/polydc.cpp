#include <iostream>
#include <string>
#include <vector>

#include "polydc_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return polydc::cli::run(args, std::cout, std::cerr);
}
