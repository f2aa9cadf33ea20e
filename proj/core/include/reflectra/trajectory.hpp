#pragma once

// Runs the reflective iteration to its limit. Every trajectory either hits
// the fixed point 0 or falls into a cycle; detection is a seen-value map
// over one run (trajectories are short, the map gives the tail length for
// free). A cycle is identified by its canonical value: the smallest member
// magnitude, reported as a positive integer. Mirror-image orbits (a cycle
// and its element-wise negation) therefore share one identity, which keeps
// classification invariant under negating the input.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "reflectra/digits.hpp"

namespace reflectra {

enum class LimitKind : std::uint8_t { Zero, Cycle };

struct TerminalKind {
  LimitKind kind = LimitKind::Zero;
  ReflectiveInt cycle_canonical = 0;  // smallest member magnitude; 0 for Zero
  std::uint32_t period = 0;           // distinct values on the cycle; 0 for Zero

  friend bool operator==(const TerminalKind&, const TerminalKind&) = default;
};

// One run of the iteration. iterates[0] is step(start); the list stops at
// the first iterate that is 0 or lies on the terminal cycle (inclusive), so
// tail_length == iterates.size().
struct Trajectory {
  ReflectiveInt start = 0;
  std::vector<ReflectiveInt> iterates;
  std::size_t tail_length = 0;
  TerminalKind terminal;
};

struct Classification {
  ReflectiveInt input = 0;
  TerminalKind limit;
  // 1-based index of the first iterate that is 0 / a cycle member;
  // 0 only for input 0.
  std::uint32_t iterations = 0;

  friend bool operator==(const Classification&, const Classification&) = default;
};

Trajectory run_sequence(ReflectiveInt start,
                        std::uint64_t max_steps = kDefaultStepBudget);

Classification classify(ReflectiveInt start,
                        std::uint64_t max_steps = kDefaultStepBudget);

// All distinct values on the cycle through seed, in trajectory order
// starting from the member with the smallest magnitude (the positive one
// when both signs are present). Throws NotOnCycleError if iterating from
// seed never returns to it.
std::vector<ReflectiveInt> cycle_members(
    ReflectiveInt seed, std::uint64_t max_steps = kDefaultStepBudget);

}  // namespace reflectra
