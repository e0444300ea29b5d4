#include <iostream>

#include "mtvrp/cli.hpp"

int main(int argc, char** argv) {
  return mtvrp::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
