#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace unital {

/// One named assertion; `witness` describes a counterexample or, on success,
/// an optional positive witness.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::map<std::string, std::uint64_t> counts;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  void add(std::string name, bool ok, std::string witness = {}) {
    checks.push_back({std::move(name), ok, std::move(witness)});
  }
};

}  // namespace unital
