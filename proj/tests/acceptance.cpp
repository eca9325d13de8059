// One line per acceptance criterion; exit status 1 if any is red.

#include <cstdio>

#include "verify_suite.hpp"

int main() {
  verify::Context ctx;
  int failed = 0;
  for (const auto& f : verify::acceptance_criteria()) {
    verify::Criterion c = verify::run_timed(f, ctx);
    if (!c.pass()) ++failed;
    std::printf("%-4s criterion %2d: %s (%.1f s)\n", c.pass() ? "PASS" : "FAIL", c.id, c.title.c_str(), c.seconds);
    for (const auto& k : c.checks) {
      if (k.pass && k.detail.empty()) continue;
      std::printf("       %s %s: residual %.3g, tolerance %.3g%s%s\n", k.pass ? "ok " : "BAD", k.name.c_str(),
                  k.residual, k.tolerance, k.detail.empty() ? "" : "; ", k.detail.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d of 12 criteria red\n", failed);
  return failed ? 1 : 0;
}
