// Acceptance runner: one line per check. With --criterion K only that
// criterion runs; the exit status is 0 iff every gated check passed.

#include <cstdlib>
#include <iostream>
#include <string_view>

#include "harness/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace cvdj::harness;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: cvdj_acceptance [--criterion K]\n";
      return 2;
    }
  }
  if (only < 0 || only > kCriterionCount) {
    std::cerr << "criterion must be in [1, " << kCriterionCount << "]\n";
    return 2;
  }
  const auto rows = only ? run_criterion(only) : run_acceptance();
  print_results(std::cout, rows);
  return all_pass(rows) ? 0 : 1;
}
