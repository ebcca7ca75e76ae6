// Runs the ten acceptance criteria (or those named on the command line) and
// prints one PASS/FAIL line each; exits 1 when any criterion fails.
#include "checks.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
  std::vector<bnsr::checks::CheckResult> results;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) results.push_back(bnsr::checks::acceptance(std::atoi(argv[i])));
  } else {
    results = bnsr::checks::run_acceptance();
  }
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %s (%.3f s)%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.empty() ? "" : " :: ", r.detail.c_str());
    failed += !r.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed ? 1 : 0;
}
