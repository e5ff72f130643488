#include <iostream>

#include "starcut/cli.hpp"

int main(int argc, char** argv) {
  return starcut::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
