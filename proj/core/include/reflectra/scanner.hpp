#pragma once

// Exhaustive classification of integer ranges. Work is split into
// fixed-size contiguous chunks handed to worker threads; the only merge
// operation is adding count maps, so the report is identical for any
// worker count. Memoization caches (class, steps-to-terminal) by the
// absolute value of intermediate iterates and can be switched off, kept
// per worker, or shared read-mostly across workers; all modes must agree
// with the plain trajectory-module classification to the bit.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "reflectra/catalog.hpp"
#include "reflectra/trajectory.hpp"

namespace reflectra {

struct ScanRange {
  ReflectiveInt lo = 1;
  ReflectiveInt hi = 1;
  std::optional<int> digit_width;

  // The full d-digit range [10^(d-1), 10^d - 1], 1 <= d <= 18.
  static ScanRange for_digits(int d);

  friend bool operator==(const ScanRange&, const ScanRange&) = default;
};

enum class MemoMode : std::uint8_t { Off, PerWorker, Shared };

struct ScanOptions {
  unsigned workers = 1;
  MemoMode memo = MemoMode::PerWorker;
  std::uint64_t chunk_size = 1u << 16;
  std::uint64_t max_steps = kDefaultStepBudget;
};

// Aggregated result of one scan. Classes are keyed by the cycle canonical,
// with 0 standing for the zero limit. elapsed and worker_count describe
// the run, not the mathematics; every other field depends only on the
// range.
struct ScanReport {
  ScanRange range;
  std::map<ReflectiveInt, std::uint64_t> class_counts;
  std::map<ReflectiveInt, std::map<std::uint32_t, std::uint64_t>> histogram;
  std::map<ReflectiveInt, std::uint32_t> max_iterations;
  std::uint64_t total = 0;
  std::chrono::milliseconds elapsed{0};
  unsigned worker_count = 1;
};

// Content equality, ignoring elapsed and worker_count.
bool same_counts(const ScanReport& a, const ScanReport& b);

ScanReport scan(const ScanRange& range, const ScanOptions& opts = {});

// Smallest d-digit integer with a cyclic limit, 4 <= d <= 18.
ReflectiveInt first_cyclic_in_width(int d,
                                    std::uint64_t max_steps = kDefaultStepBudget);

// Distinct terminal cycles reached from the range, as fully populated
// families (member set via cycle_members, name/formula matched against the
// width inventory when the cycle is listed there).
std::vector<CycleFamily> discovered_cycles(const ScanRange& range,
                                           const ScanOptions& opts = {});

}  // namespace reflectra
