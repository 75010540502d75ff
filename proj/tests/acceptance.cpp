#include "spinor_forge/report.hpp"

#include <cstdio>

int main() {
  int failed = 0;
  for (const auto& row : spinor_forge::run_report()) {
    std::printf("[%s] criterion %2d: %s | expected: %s | computed: %s | %.2fs\n", row.pass ? "PASS" : "FAIL", row.id,
                row.name.c_str(), row.expected.c_str(), row.computed.c_str(), row.seconds);
    if (!row.pass) ++failed;
  }
  std::printf("%d/%d criteria pass\n", spinor_forge::kCriterionCount - failed, spinor_forge::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
