#include <iostream>
#include <string>
#include <vector>

#include "hallkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = hallkit::dispatch(args);
  std::cout << outcome.out;
  if (!outcome.err.empty()) std::cerr << outcome.err;
  return outcome.exit_code;
}
