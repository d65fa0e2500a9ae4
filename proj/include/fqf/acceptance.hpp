#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace fqf {

// One end-to-end verification of a headline identity, packaged so that the
// CLI (`fqf verify`) and the test suite run exactly the same code.
struct AcceptanceCheck {
  int id;
  std::string name;
  bool fast;  // cheap enough for the default suite
  std::function<std::pair<bool, std::string>()> run;  // (pass, detail)
};

struct CheckResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

const std::vector<AcceptanceCheck>& acceptance_checks();

std::vector<CheckResult> run_acceptance(bool fast_only = false);

// "[PASS] 01 mass-irreducible (0.32s) ..." -- one line per criterion.
std::string format_result_line(const CheckResult& r);

}  // namespace fqf
