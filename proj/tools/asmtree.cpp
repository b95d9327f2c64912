#include <iostream>
#include <string>
#include <vector>

#include "asmtree/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return asmtree::cli::App().run(args, std::cout, std::cerr);
}
