#include <iostream>

#include "lpi/textio/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lpi::text::run(args, std::cout, std::cerr);
}
