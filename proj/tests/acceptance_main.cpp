// Prints one line per acceptance criterion; exits nonzero if any fails.
#include "acceptance/criteria.hpp"

#include <cstdio>

int main() {
  int failed = 0;
  for (const auto& c : surfres::acceptance::run_all()) {
    std::printf("%-4s criterion %2d: %s -- %s\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), c.detail.c_str());
    if (!c.pass) ++failed;
  }
  std::printf("%d/%d criteria passed\n", surfres::acceptance::criterion_count - failed,
              surfres::acceptance::criterion_count);
  return failed == 0 ? 0 : 1;
}
