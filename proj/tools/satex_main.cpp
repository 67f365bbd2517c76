#include <iostream>
#include <string>
#include <vector>

#include "satex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return satex::dispatch(args, std::cout, std::cerr);
}
