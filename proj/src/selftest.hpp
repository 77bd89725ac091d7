#pragma once

#include <string>
#include <vector>

namespace cf {

// One module battery: counts plus messages for every failed check.
struct SelfTestResult {
  std::string module;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;
};

SelfTestResult selftest_atom();
SelfTestResult selftest_lattice();
SelfTestResult selftest_frft();
SelfTestResult selftest_zak();
SelfTestResult selftest_frame();

// All batteries in a fixed order.
std::vector<SelfTestResult> selftest_all();

}  // namespace cf
