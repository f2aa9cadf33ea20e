#include "reflectra/trajectory.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace reflectra {

namespace {

ReflectiveInt smallest_magnitude(const std::vector<ReflectiveInt>& values,
                                 std::size_t first, std::size_t last) {
  std::uint64_t best = 0;
  bool have = false;
  for (std::size_t i = first; i < last; ++i) {
    const std::uint64_t m = detail::magnitude_of(values[i]);
    if (!have || m < best) {
      best = m;
      have = true;
    }
  }
  return static_cast<ReflectiveInt>(best);
}

}  // namespace

Trajectory run_sequence(ReflectiveInt start, std::uint64_t max_steps) {
  detail::require_supported(start);
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");

  Trajectory out;
  out.start = start;

  // path[k] is u_k with u_0 = start; seen maps value -> its index in path.
  std::vector<ReflectiveInt> path{start};
  std::unordered_map<ReflectiveInt, std::size_t> seen;
  seen.reserve(64);
  seen.emplace(start, 0);

  ReflectiveInt v = start;
  for (std::uint64_t k = 1; k <= max_steps; ++k) {
    v = detail::step_unchecked(v);
    if (v == 0) {
      path.push_back(0);
      out.iterates.assign(path.begin() + 1, path.end());
      out.tail_length = out.iterates.size();
      out.terminal = TerminalKind{LimitKind::Zero, 0, 0};
      return out;
    }
    auto [it, inserted] = seen.emplace(v, path.size());
    if (!inserted) {
      const std::size_t j = it->second;  // first index of the repeated value
      // Cycle occupies path[j..k-1]; the first *iterate* on it is
      // path[max(j,1)] (when j == 0 the start itself is a member).
      const std::size_t tail = std::max<std::size_t>(j, 1);
      out.terminal = TerminalKind{
          LimitKind::Cycle,
          smallest_magnitude(path, j, path.size()),
          static_cast<std::uint32_t>(path.size() - j)};
      out.iterates.assign(path.begin() + 1, path.begin() + tail + 1);
      out.tail_length = tail;
      return out;
    }
    path.push_back(v);
  }
  throw StepBudgetError(start, max_steps);
}

Classification classify(ReflectiveInt start, std::uint64_t max_steps) {
  Classification out;
  out.input = start;
  if (start == 0) {
    out.limit = TerminalKind{LimitKind::Zero, 0, 0};
    out.iterations = 0;
    return out;
  }
  Trajectory t = run_sequence(start, max_steps);
  out.limit = t.terminal;
  out.iterations = static_cast<std::uint32_t>(t.tail_length);
  return out;
}

std::vector<ReflectiveInt> cycle_members(ReflectiveInt seed,
                                         std::uint64_t max_steps) {
  detail::require_supported(seed);
  if (seed == 0) return {0};

  std::vector<ReflectiveInt> orbit{seed};
  std::unordered_set<ReflectiveInt> seen{seed};
  seen.reserve(64);

  ReflectiveInt v = seed;
  for (std::uint64_t k = 1; k <= max_steps; ++k) {
    v = detail::step_unchecked(v);
    if (v == seed) break;
    // Reaching 0 or revisiting any other value means the walk can never
    // come back to seed.
    if (v == 0 || !seen.insert(v).second) throw NotOnCycleError(seed);
    orbit.push_back(v);
    if (k == max_steps) throw NotOnCycleError(seed);
  }

  auto best = orbit.begin();
  for (auto it = orbit.begin(); it != orbit.end(); ++it) {
    const std::uint64_t m = detail::magnitude_of(*it);
    const std::uint64_t bm = detail::magnitude_of(*best);
    if (m < bm || (m == bm && *it > *best)) best = it;
  }
  std::rotate(orbit.begin(), best, orbit.end());
  return orbit;
}

}  // namespace reflectra
