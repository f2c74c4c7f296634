#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hermcode {

/// Raised when an exhaustive enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what + ": needs " + std::to_string(required) + ", budget " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_, budget_;
};

/// Maximum number of coordinate vectors scanned when listing projective points.
inline constexpr std::uint64_t kDefaultPointBudget = std::uint64_t{1} << 26;
/// Maximum number of (form, point) evaluations for a form enumeration.
inline constexpr std::uint64_t kDefaultEvaluationBudget = 500'000'000;
/// Maximum number of projective message classes for exhaustive minimum distance.
inline constexpr std::uint64_t kDefaultMessageBudget = 2'000'000;

}  // namespace hermcode
