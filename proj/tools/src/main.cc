#include <iostream>
#include <string>
#include <vector>

#include "usc/cli/commands.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return usc::cli::run_command(args, std::cout, std::cerr);
}
