// Named pass/fail records shared by the pipeline checks and the verifier.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace cstar {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  /// Assumptions the tool could not certify (recorded, not checked).
  std::vector<std::string> assumptions;

  bool verdict() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace cstar
