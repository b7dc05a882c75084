#include <iostream>
#include <string>
#include <vector>

#include "starhankel/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return starhankel::cli::run(args, std::cout, std::cerr);
}
