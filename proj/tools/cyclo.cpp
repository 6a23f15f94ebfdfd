#include <iostream>
#include <string>
#include <vector>

#include "cyclo/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return cyclo::cli::run(args, std::cout, std::cerr);
}
