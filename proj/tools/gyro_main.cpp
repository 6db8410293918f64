#include <iostream>

#include "gyro/cli.hpp"

int main(int argc, char** argv) {
  return gyro::run_cli(argc, argv, std::cout, std::cerr);
}
