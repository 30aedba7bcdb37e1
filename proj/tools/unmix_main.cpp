#include <iostream>
#include <string>
#include <vector>

#include "unmix/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = unmix::run_cli(args, std::cin);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
