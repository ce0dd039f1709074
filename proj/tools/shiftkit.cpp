#include <iostream>
#include <string>
#include <vector>

#include "shiftkit/cli/app.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return shiftkit::cli::run_app(args, std::cout, std::cerr);
}
