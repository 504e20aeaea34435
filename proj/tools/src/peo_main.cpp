#include <iostream>

#include "peo_tools/commands.hpp"

int main(int argc, char** argv) {
  return peo::tools::run(argc, argv, std::cout, std::cerr);
}
