#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace psc::checks {

// One verified claim: a stable label, the value the library computed, the
// frozen reference value, and whether they agree.
struct CheckItem {
  std::string claim;
  std::string computed;
  std::string expected;
  bool pass = false;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<CheckItem> items;

  bool pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

struct CheckOptions {
  std::uint64_t seed = 12345;
  bool parallel = true;
};

// Runs the twelve verification groups and returns their results; never
// throws on a failing claim (failures are recorded), only on internal
// errors.
std::vector<CriterionResult> run_criteria(const CheckOptions& opt = {});

}  // namespace psc::checks
