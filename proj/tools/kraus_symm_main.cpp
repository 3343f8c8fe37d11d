#include <iostream>
#include <string>
#include <vector>

#include "kraus_symm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return kraus_symm::cli::run(args, std::cout, std::cerr);
}
