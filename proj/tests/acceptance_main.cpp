// Whole-library acceptance run: one pass/fail line per criterion.
#include <chrono>
#include <cstdio>

#include "chainfib/verify.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  bool all_passed = true;
  int index = 0;
  for (const chainfib::CheckResult& r : chainfib::run_all_checks()) {
    ++index;
    std::printf("[%s] criterion %d: %s (%s)\n", r.passed ? "PASS" : "FAIL",
                index, r.name.c_str(), r.detail.c_str());
    all_passed = all_passed && r.passed;
  }
  const double seconds =
      std::chrono::duration<double>(clock::now() - start).count();
  std::printf("%s in %.1f s\n", all_passed ? "all criteria passed" : "FAILURES",
              seconds);
  return all_passed ? 0 : 1;
}
