// Acceptance suite: runs every contract of the library end to end with one
// pass/fail line per criterion. Seed comes from FRG_SEED (default 42).

#include <cstdio>

#include "frg/cli.hpp"
#include "frg/verification.hpp"

int main() {
  const std::uint64_t seed = frg::cli::seed_from_environment();
  std::printf("running acceptance suite with seed %llu\n",
              static_cast<unsigned long long>(seed));
  const std::vector<frg::CheckResult> results = frg::acceptance_suite(seed);
  std::fputs(frg::format_report(results).c_str(), stdout);

  int failures = 0;
  for (const frg::CheckResult& r : results) failures += !r.pass;
  if (failures > 0) {
    std::printf("%d acceptance check(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all %zu acceptance checks passed\n", results.size());
  return 0;
}
