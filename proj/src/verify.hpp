#pragma once

#include <string>
#include <vector>

namespace morincob {

// One named machine check; `residuals` holds the offending quantities in
// canonical text form when the check fails.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string note;
  std::vector<std::string> residuals;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace morincob
