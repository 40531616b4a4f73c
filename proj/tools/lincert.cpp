#include <iostream>
#include <string>
#include <vector>

#include "lincert/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lincert::run(args, std::cout, std::cerr);
}
