#include <iostream>

#include "tropmat/cli.hpp"

int main(int argc, char** argv) {
  return tropmat::run_command_line(argc, argv, std::cout, std::cerr);
}
