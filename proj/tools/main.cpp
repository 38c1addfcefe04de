#include <iostream>
#include <string>
#include <vector>

#include "uhqft/cli.hpp"

int main(int argc, char** argv) {
  return uhqft::execute(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
