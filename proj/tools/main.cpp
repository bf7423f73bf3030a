#include <iostream>

#include "hyperchar/cli.hpp"

int main(int argc, char** argv) {
  return hyperchar::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
