#include <iostream>

#include "koszul_lift/cli.hpp"

int main(int argc, char** argv) {
  return koszul_lift::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
