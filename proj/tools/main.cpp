#include <iostream>

#include "relcalc/cli.hpp"

int main(int argc, char** argv) {
  return relcalc::run(argc, argv, std::cout, std::cerr);
}
