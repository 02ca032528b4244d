#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "nsk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  nsk::cli::Options options;
  const char* color = std::getenv("NSK_COLOR");
  options.color = isatty(STDOUT_FILENO) && !(color && std::strcmp(color, "0") == 0);
  return nsk::cli::run(args, std::cout, std::cerr, options);
}
