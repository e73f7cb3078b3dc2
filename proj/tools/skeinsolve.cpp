#include <iostream>
#include <string>
#include <vector>

#include <skeinsolve/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skein::cli::run(std::move(args), std::cout, std::cerr);
}
