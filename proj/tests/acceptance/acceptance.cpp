// Runs acceptance criteria and prints one PASS/FAIL line per criterion.
// Usage: acceptance [id ...] [--seed N]; no ids means all.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "stableorders/repro.hpp"

using namespace stableorders;

int main(int argc, char** argv) {
  std::uint64_t seed = 42;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      const int id = std::atoi(arg.c_str());
      if (id < 1 || id > kCriterionCount) {
        std::fprintf(stderr, "bad criterion id '%s'\n", arg.c_str());
        return 2;
      }
      ids.push_back(id);
    }
  }
  if (ids.empty())
    for (int k = 1; k <= kCriterionCount; ++k) ids.push_back(k);

  int failed = 0;
  for (int id : ids) {
    const auto r = run_criterion(id, seed);
    const bool pass = r.status == CriterionStatus::Pass;
    failed += pass ? 0 : 1;
    std::printf("%s criterion %d (%s): %s; expected %s; tolerance %s [%.0f ms]\n", pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.observed.c_str(), r.expected.c_str(), r.tolerance.c_str(), r.runtime_ms);
    for (const auto& c : r.checks) {
      if (c.pass) continue;
      std::printf("    %s %s: observed %.6g", c.inconclusive ? "INCONCLUSIVE" : "FAIL", c.name.c_str(), c.observed);
      if (std::isfinite(c.expected)) std::printf(", expected %.6g", c.expected);
      std::printf(", tolerance %.3g\n", c.tolerance);
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
