// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "orbitforge/verify.hpp"

using namespace orbitforge;

int main(int argc, char** argv) {
  SuiteConfig cfg;
  if (argc > 1) cfg.seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0, index = 0;
  double total = 0;
  for (const auto& s : criterion_suites()) {
    const SuiteResult r = run_suite(s, cfg);
    total += r.seconds;
    if (!r.passed) ++failed;
    std::printf("criterion %2d %-24s %s  (%.1fs) %s\n", ++index, r.name.c_str(), r.passed ? "PASS" : "FAIL",
                r.seconds, r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed in %.1fs\n", index - failed, index, total);
  return failed == 0 ? 0 : 1;
}
