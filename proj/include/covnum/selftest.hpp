#pragma once

#include <string>
#include <vector>

namespace covnum {

struct SelfTestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Fast invariant checks across all modules (a few seconds in total).
std::vector<SelfTestResult> run_selftest(int threads = 1);

}  // namespace covnum
