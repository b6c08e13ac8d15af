#pragma once

#include <string>
#include <vector>

namespace tcalg {

/// Outcome of one verified identity. `certificate` carries the offending
/// values (or a convention diagnosis) when the identity fails.
struct CheckResult {
  std::string identity;
  bool passed = true;
  std::string certificate;
};

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace tcalg
