#pragma once

#include <string>
#include <vector>

namespace necip::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

// "[PASS] 3 subfunction counts (0.12 s): detail"
std::string format(const CriterionResult& r);

}  // namespace necip::acceptance
