#include <iostream>

#include "brick/cli.hpp"

int main(int argc, char** argv) {
  return brick::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
