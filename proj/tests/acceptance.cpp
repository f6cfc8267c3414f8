#include <cstdio>
#include <cstdlib>
#include <string>

#include "bsdw/suites.hpp"

int main(int argc, char** argv) {
  bsdw::SuiteOptions o;
  if (argc > 1) o.seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0, total = 0;
  for (const auto& r : bsdw::acceptance_checks(o)) {
    ++total;
    if (!r.pass) ++failed;
    std::printf("[%s] C%d %s | %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.criterion, r.name.c_str(), r.detail.c_str(),
                r.seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%d acceptance checks passed\n", total - failed, total);
  return failed == 0 ? 0 : 1;
}
