#include <iostream>

#include "tcalg/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tcalg::cli::run(args, std::cout, std::cerr);
}
