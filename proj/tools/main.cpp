#include <iostream>
#include <string>
#include <vector>

#include "twistlat/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return twistlat::run(args, std::cout, std::cerr);
}
