#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace reflectra {

// Input magnitude at or above the supported 18-digit width.
class OverflowError : public std::domain_error {
 public:
  explicit OverflowError(std::int64_t value)
      : std::domain_error("magnitude overflow: |" + std::to_string(value) +
                          "| is not below 10^18"),
        value_(value) {}
  std::int64_t value() const noexcept { return value_; }

 private:
  std::int64_t value_;
};

// Neither zero nor a repeated value occurred within the step budget.
class StepBudgetError : public std::runtime_error {
 public:
  StepBudgetError(std::int64_t witness, std::uint64_t budget)
      : std::runtime_error("step budget of " + std::to_string(budget) +
                           " exceeded while iterating from " +
                           std::to_string(witness)),
        witness_(witness),
        budget_(budget) {}
  std::int64_t witness() const noexcept { return witness_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::int64_t witness_;
  std::uint64_t budget_;
};

// Seed passed to cycle_members never returns to itself.
class NotOnCycleError : public std::invalid_argument {
 public:
  explicit NotOnCycleError(std::int64_t seed)
      : std::invalid_argument(std::to_string(seed) +
                              " does not lie on a cycle"),
        seed_(seed) {}
  std::int64_t seed() const noexcept { return seed_; }

 private:
  std::int64_t seed_;
};

}  // namespace reflectra
