#include "reflectra/scanner.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace reflectra {

namespace {

constexpr std::int64_t pow10ll(int e) {
  std::int64_t p = 1;
  for (int i = 0; i < e; ++i) p *= 10;
  return p;
}

// ---------------------------------------------------------------------
// Memo caches.
//
// An entry maps the magnitude of an iterate to (class id, g), where g >= 1
// is the number of steps from that value to the first terminal value (0 or
// a cycle member). Terminal values themselves are never cached: a lookup
// hit at step k then guarantees no earlier iterate was terminal, so
// iterations = k + g without any further checks. Every iterate is a
// multiple of 9, so flat caches index by magnitude / 9.
// ---------------------------------------------------------------------

constexpr std::uint32_t kEntryValid = 1u << 31;
constexpr std::uint32_t kMaxCachedClass = (1u << 12) - 2;
constexpr std::uint32_t kMaxCachedSteps = (1u << 16) - 1;
constexpr int kFlatCacheMaxWidth = 8;  // 10^8 / 9 entries ~ 44 MB

constexpr std::uint32_t encode(std::uint32_t cls, std::uint32_t g) {
  return kEntryValid | (cls << 16) | g;
}

struct NoCache {
  static bool lookup(std::uint64_t, std::uint32_t&, std::uint32_t&) {
    return false;
  }
  static void store(std::uint64_t, std::uint32_t, std::uint32_t) {}
};

class FlatCache {
 public:
  explicit FlatCache(std::size_t slots) : slots_(slots, 0) {}

  bool lookup(std::uint64_t m, std::uint32_t& cls, std::uint32_t& g) const {
    const std::uint32_t e = slots_[m / 9];
    if (!(e & kEntryValid)) return false;
    cls = (e >> 16) & 0x7fff;
    g = e & 0xffff;
    return true;
  }

  void store(std::uint64_t m, std::uint32_t cls, std::uint32_t g) {
    if (cls > kMaxCachedClass || g > kMaxCachedSteps) return;
    slots_[m / 9] = encode(cls, g);
  }

 private:
  std::vector<std::uint32_t> slots_;
};

// Same layout as FlatCache but written concurrently. Entries are a pure
// function of the magnitude, so racing writers store identical values and
// relaxed ordering is enough.
class SharedFlatCache {
 public:
  explicit SharedFlatCache(std::size_t slots) : slots_(slots, 0) {}

  bool lookup(std::uint64_t m, std::uint32_t& cls, std::uint32_t& g) {
    const std::uint32_t e = std::atomic_ref<std::uint32_t>(slots_[m / 9])
                                .load(std::memory_order_relaxed);
    if (!(e & kEntryValid)) return false;
    cls = (e >> 16) & 0x7fff;
    g = e & 0xffff;
    return true;
  }

  void store(std::uint64_t m, std::uint32_t cls, std::uint32_t g) {
    if (cls > kMaxCachedClass || g > kMaxCachedSteps) return;
    std::atomic_ref<std::uint32_t>(slots_[m / 9])
        .store(encode(cls, g), std::memory_order_relaxed);
  }

 private:
  std::vector<std::uint32_t> slots_;
};

// Fallback for ranges too wide for a flat table.
class HashCache {
 public:
  bool lookup(std::uint64_t m, std::uint32_t& cls, std::uint32_t& g) const {
    auto it = map_.find(m);
    if (it == map_.end()) return false;
    cls = (it->second >> 16) & 0x7fff;
    g = it->second & 0xffff;
    return true;
  }

  void store(std::uint64_t m, std::uint32_t cls, std::uint32_t g) {
    if (cls > kMaxCachedClass || g > kMaxCachedSteps) return;
    if (map_.size() >= kMaxEntries) return;
    map_.emplace(m, encode(cls, g));
  }

 private:
  static constexpr std::size_t kMaxEntries = 1u << 21;
  std::unordered_map<std::uint64_t, std::uint32_t> map_;
};

// ---------------------------------------------------------------------
// Class registry: canonical value <-> dense id, shared by all workers of
// one scan so cache entries mean the same thing everywhere. Id 0 is the
// zero limit.
// ---------------------------------------------------------------------

class ClassRegistry {
 public:
  ClassRegistry() {
    canonicals_.push_back(0);
    ids_.emplace(0, 0);
  }

  std::uint32_t intern(ReflectiveInt canonical) {
    std::lock_guard lock(mu_);
    auto [it, inserted] = ids_.emplace(canonical, canonicals_.size());
    if (inserted) canonicals_.push_back(canonical);
    return it->second;
  }

  const std::vector<ReflectiveInt>& canonicals() const { return canonicals_; }

 private:
  std::mutex mu_;
  std::vector<ReflectiveInt> canonicals_;
  std::unordered_map<ReflectiveInt, std::uint32_t> ids_;
};

struct Accumulator {
  std::vector<std::uint64_t> counts;                // by class id
  std::vector<std::uint32_t> max_iters;
  std::vector<std::vector<std::uint64_t>> hist;     // [id][iterations]

  void add(std::uint32_t id, std::uint32_t iters) {
    if (id >= counts.size()) {
      counts.resize(id + 1, 0);
      max_iters.resize(id + 1, 0);
      hist.resize(id + 1);
    }
    ++counts[id];
    if (iters > max_iters[id]) max_iters[id] = iters;
    auto& h = hist[id];
    if (iters >= h.size()) h.resize(iters + 1, 0);
    ++h[iters];
  }
};

// Per-worker view of the registry; avoids the registry lock on repeats.
class LocalIds {
 public:
  explicit LocalIds(ClassRegistry& reg) : reg_(reg) {}

  std::uint32_t id_for(ReflectiveInt canonical) {
    auto it = mirror_.find(canonical);
    if (it != mirror_.end()) return it->second;
    const std::uint32_t id = reg_.intern(canonical);
    mirror_.emplace(canonical, id);
    return id;
  }

 private:
  ClassRegistry& reg_;
  std::unordered_map<ReflectiveInt, std::uint32_t> mirror_;
};

ReflectiveInt smallest_magnitude(const std::vector<ReflectiveInt>& values,
                                 std::size_t first) {
  std::uint64_t best = detail::magnitude_of(values[first]);
  for (std::size_t i = first + 1; i < values.size(); ++i)
    best = std::min(best, detail::magnitude_of(values[i]));
  return static_cast<ReflectiveInt>(best);
}

// One classification in terms of registry ids. `path` is scratch storage
// owned by the caller so the hot loop never reallocates.
template <typename Cache>
std::pair<std::uint32_t, std::uint32_t> classify_with_cache(
    ReflectiveInt start, std::uint64_t max_steps, Cache& cache,
    LocalIds& ids, std::vector<ReflectiveInt>& path) {
  path.clear();
  path.push_back(start);
  ReflectiveInt v = start;
  for (std::uint64_t k = 1; k <= max_steps; ++k) {
    v = detail::step_unchecked(v);
    if (v == 0) {
      for (std::size_t i = 1; i < path.size(); ++i)
        cache.store(detail::magnitude_of(path[i]), 0,
                    static_cast<std::uint32_t>(k - i));
      return {0, static_cast<std::uint32_t>(k)};
    }
    std::uint32_t cls, g;
    if (cache.lookup(detail::magnitude_of(v), cls, g)) {
      const std::uint32_t iters = static_cast<std::uint32_t>(k) + g;
      for (std::size_t i = 1; i < path.size(); ++i)
        cache.store(detail::magnitude_of(path[i]), cls,
                    iters - static_cast<std::uint32_t>(i));
      return {cls, iters};
    }
    // Trajectories are a handful of values long; a linear scan beats a
    // hash map here.
    for (std::size_t j = 0; j < path.size(); ++j) {
      if (path[j] != v) continue;
      const std::uint32_t id = ids.id_for(smallest_magnitude(path, j));
      for (std::size_t i = 1; i < j; ++i)
        cache.store(detail::magnitude_of(path[i]), id,
                    static_cast<std::uint32_t>(j - i));
      return {id, static_cast<std::uint32_t>(std::max<std::size_t>(j, 1))};
    }
    path.push_back(v);
  }
  throw StepBudgetError(start, max_steps);
}

struct ScanJob {
  ReflectiveInt lo, hi;
  std::uint64_t chunk_size, max_steps, n_chunks;
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<bool> abort{false};
  std::mutex error_mu;
  std::exception_ptr error;

  void fail(std::exception_ptr e) {
    std::lock_guard lock(error_mu);
    if (!error) error = e;
    abort.store(true, std::memory_order_relaxed);
  }
};

template <typename Cache>
void run_worker(ScanJob& job, ClassRegistry& registry, Accumulator& acc,
                Cache& cache) {
  LocalIds ids(registry);
  std::vector<ReflectiveInt> path;
  path.reserve(128);
  try {
    for (;;) {
      if (job.abort.load(std::memory_order_relaxed)) return;
      const std::uint64_t c =
          job.next_chunk.fetch_add(1, std::memory_order_relaxed);
      if (c >= job.n_chunks) return;
      const ReflectiveInt a =
          job.lo + static_cast<ReflectiveInt>(c * job.chunk_size);
      const ReflectiveInt b = std::min<ReflectiveInt>(
          job.hi, a + static_cast<ReflectiveInt>(job.chunk_size) - 1);
      for (ReflectiveInt x = a; x <= b; ++x) {
        const auto [id, iters] =
            classify_with_cache(x, job.max_steps, cache, ids, path);
        acc.add(id, iters);
      }
    }
  } catch (...) {
    job.fail(std::current_exception());
  }
}

// MemoMode::Off goes through the trajectory module itself, keeping a fully
// independent route for the memo-equivalence tests.
void run_worker_plain(ScanJob& job, ClassRegistry& registry,
                      Accumulator& acc) {
  LocalIds ids(registry);
  try {
    for (;;) {
      if (job.abort.load(std::memory_order_relaxed)) return;
      const std::uint64_t c =
          job.next_chunk.fetch_add(1, std::memory_order_relaxed);
      if (c >= job.n_chunks) return;
      const ReflectiveInt a =
          job.lo + static_cast<ReflectiveInt>(c * job.chunk_size);
      const ReflectiveInt b = std::min<ReflectiveInt>(
          job.hi, a + static_cast<ReflectiveInt>(job.chunk_size) - 1);
      for (ReflectiveInt x = a; x <= b; ++x) {
        const Classification c2 = classify(x, job.max_steps);
        const bool cyclic = c2.limit.kind == LimitKind::Cycle;
        acc.add(ids.id_for(cyclic ? c2.limit.cycle_canonical : 0),
                c2.iterations);
      }
    }
  } catch (...) {
    job.fail(std::current_exception());
  }
}

void validate(const ScanRange& range, const ScanOptions& opts) {
  if (range.lo < 1 || range.lo > range.hi || range.hi >= kMagnitudeLimit)
    throw std::invalid_argument("scan range must satisfy 1 <= lo <= hi < 10^18");
  if (range.digit_width) {
    const int d = *range.digit_width;
    if (d < 1 || d > 18 || range.lo != pow10ll(d - 1) ||
        range.hi != pow10ll(d) - 1)
      throw std::invalid_argument("digit_width does not match [lo, hi]");
  }
  if (opts.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (opts.chunk_size < 1)
    throw std::invalid_argument("chunk_size must be >= 1");
  if (opts.max_steps < 1)
    throw std::invalid_argument("max_steps must be >= 1");
}

}  // namespace

ScanRange ScanRange::for_digits(int d) {
  if (d < 1 || d > 18)
    throw std::invalid_argument("digit width must be in [1, 18]");
  return {pow10ll(d - 1), pow10ll(d) - 1, d};
}

ScanReport scan(const ScanRange& range, const ScanOptions& opts) {
  validate(range, opts);
  const auto t0 = std::chrono::steady_clock::now();

  ScanJob job;
  job.lo = range.lo;
  job.hi = range.hi;
  job.chunk_size = opts.chunk_size;
  job.max_steps = opts.max_steps;
  const std::uint64_t n =
      static_cast<std::uint64_t>(range.hi - range.lo) + 1;
  job.n_chunks = (n + opts.chunk_size - 1) / opts.chunk_size;

  ClassRegistry registry;
  std::vector<Accumulator> accs(opts.workers);

  // A flat table pays off when the scan will touch a fair share of the
  // width's iterate space; tiny ranges use the hash cache instead of
  // zeroing megabytes per call.
  const int width = digit_count(range.hi);
  const std::size_t flat_slots =
      width <= kFlatCacheMaxWidth
          ? static_cast<std::size_t>(pow10ll(width) / 9 + 1)
          : 0;
  const bool flat = flat_slots != 0 && n * 64 >= flat_slots;

  std::unique_ptr<SharedFlatCache> shared;
  if (opts.memo == MemoMode::Shared && flat)
    shared = std::make_unique<SharedFlatCache>(flat_slots);

  {
    std::vector<std::jthread> workers;
    workers.reserve(opts.workers);
    for (unsigned w = 0; w < opts.workers; ++w) {
      Accumulator& acc = accs[w];
      workers.emplace_back([&, w] {
        switch (opts.memo) {
          case MemoMode::Off:
            run_worker_plain(job, registry, acc);
            break;
          case MemoMode::PerWorker:
            if (flat) {
              FlatCache cache(flat_slots);
              run_worker(job, registry, acc, cache);
            } else {
              HashCache cache;
              run_worker(job, registry, acc, cache);
            }
            break;
          case MemoMode::Shared:
            if (shared) {
              run_worker(job, registry, acc, *shared);
            } else {
              HashCache cache;  // range too wide for a shared flat table
              run_worker(job, registry, acc, cache);
            }
            break;
        }
      });
    }
  }

  if (job.error) std::rethrow_exception(job.error);

  ScanReport report;
  report.range = range;
  report.worker_count = opts.workers;
  const auto& canon = registry.canonicals();
  for (const Accumulator& acc : accs) {
    for (std::size_t id = 0; id < acc.counts.size(); ++id) {
      if (acc.counts[id] == 0) continue;
      const ReflectiveInt key = canon[id];
      report.class_counts[key] += acc.counts[id];
      report.total += acc.counts[id];
      auto& m = report.max_iterations[key];
      m = std::max(m, acc.max_iters[id]);
      auto& h = report.histogram[key];
      for (std::size_t it = 0; it < acc.hist[id].size(); ++it)
        if (acc.hist[id][it] != 0)
          h[static_cast<std::uint32_t>(it)] += acc.hist[id][it];
    }
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  return report;
}

bool same_counts(const ScanReport& a, const ScanReport& b) {
  return a.range == b.range && a.total == b.total &&
         a.class_counts == b.class_counts && a.histogram == b.histogram &&
         a.max_iterations == b.max_iterations;
}

ReflectiveInt first_cyclic_in_width(int d, std::uint64_t max_steps) {
  if (d < 4 || d > 18)
    throw std::invalid_argument("first_cyclic_in_width wants 4 <= d <= 18");
  const ReflectiveInt hi = pow10ll(d) - 1;
  for (ReflectiveInt x = pow10ll(d - 1); x <= hi; ++x)
    if (classify(x, max_steps).limit.kind == LimitKind::Cycle) return x;
  throw std::runtime_error("no cyclic input of width " + std::to_string(d));
}

std::vector<CycleFamily> discovered_cycles(const ScanRange& range,
                                           const ScanOptions& opts) {
  const ScanReport report = scan(range, opts);
  std::vector<CycleFamily> out;
  for (const auto& [canonical, count] : report.class_counts) {
    if (canonical == 0) continue;
    CycleFamily f;
    f.members = cycle_members(canonical, opts.max_steps);
    f.period = static_cast<std::uint32_t>(f.members.size());
    f.canonical = canonical;
    f.digit_width = digit_count(canonical);
    f.name = "cycle-" + std::to_string(canonical);
    if (f.digit_width <= 10) {
      for (const CycleFamily& known : known_cycles_for_width(f.digit_width)) {
        if (known.canonical == canonical) {
          f.name = known.name;
          f.formula = known.formula;
          break;
        }
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace reflectra
