//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Entry point of the igwp command.

#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return igwp::cli::run(args, std::cout, std::cerr);
}
