// Replays the worked examples of every module.
#include "checks.hpp"

#include <cstdio>

int main() {
  int failed = 0;
  const auto results = bnsr::checks::run_golden();
  for (const auto& r : results) {
    std::printf("[%s] %s%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.empty() ? "" : " :: ",
                r.detail.c_str());
    failed += !r.pass;
  }
  return failed ? 1 : 0;
}
