#include <iostream>

#include "hlwhit/cli.hpp"

int main(int argc, char** argv) {
  return hlwhit::run_cli(argc, argv, std::cout, std::cerr);
}
