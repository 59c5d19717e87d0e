#include <iostream>
#include <string>
#include <vector>

#include "srcomplex/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const srcomplex::cli::Report report = srcomplex::cli::execute(args);
  std::cout << report.out;
  std::cerr << report.err;
  return report.exit_code;
}
