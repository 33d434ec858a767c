#include <iostream>
#include <string>
#include <vector>

#include "nczeta/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return nczeta::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
