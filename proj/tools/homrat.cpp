#include <iostream>

#include "homrat/cli.hpp"

int main(int argc, char** argv) {
  return homrat::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
