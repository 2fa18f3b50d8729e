#pragma once

#include <string>
#include <vector>

namespace hts {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // filled in on failure
};

// Self-contained consistency checks backing `hts verify`. Each one pins a
// known value or a structural identity that the implementation must satisfy.
std::vector<CheckResult> builtin_checks();

}  // namespace hts
