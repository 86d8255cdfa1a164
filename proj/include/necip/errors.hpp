#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace necip {

// An enumeration would exceed its configured budget. Callers are expected
// to shrink the instance; results are never silently sampled.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default number of restrictions (or other enumerated objects) a single call
// may visit. NECIP_BUDGET overrides it for the whole process.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

std::uint64_t default_budget();

}  // namespace necip
