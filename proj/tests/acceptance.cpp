#include <cstdio>

#include "virmod/suite.hpp"

int main() {
  int failures = 0;
  for (const auto& c : virmod::suite::run_all()) {
    std::printf("criterion %d %s: %s: %s (%.2f s)\n", c.id, c.pass ? "PASS" : "FAIL", c.title.c_str(), c.detail.c_str(),
                c.seconds);
    std::fflush(stdout);
    failures += c.pass ? 0 : 1;
  }
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
