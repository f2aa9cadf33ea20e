#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "reflectra/scanner.hpp"
#include "reflectra/trajectory.hpp"

namespace {

using namespace reflectra;

std::vector<ReflectiveInt> random_values(int digits, std::size_t n) {
  ReflectiveInt lo = 1;
  for (int i = 1; i < digits; ++i) lo *= 10;
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<ReflectiveInt> dist(lo, lo * 10 - 1);
  std::vector<ReflectiveInt> out(n);
  for (auto& v : out) v = dist(rng);
  return out;
}

void BM_Step(benchmark::State& state) {
  const auto values = random_values(static_cast<int>(state.range(0)), 4096);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(step(values[i++ & 4095]));
  }
}
BENCHMARK(BM_Step)->Arg(4)->Arg(8)->Arg(12)->Arg(18);

void BM_Classify(benchmark::State& state) {
  const auto values = random_values(static_cast<int>(state.range(0)), 4096);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(values[i++ & 4095]));
  }
}
BENCHMARK(BM_Classify)->Arg(4)->Arg(6)->Arg(8);

void BM_ScanWidth(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  ScanOptions opts;
  opts.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan(ScanRange::for_digits(digits), opts));
  }
  const double n = static_cast<double>(ScanRange::for_digits(digits).hi -
                                       ScanRange::for_digits(digits).lo + 1);
  state.SetItemsProcessed(static_cast<std::int64_t>(n) * state.iterations());
}
BENCHMARK(BM_ScanWidth)
    ->Args({4, 1})
    ->Args({5, 1})
    ->Args({6, 1})
    ->Args({6, 2})
    ->Args({6, 4})
    ->Unit(benchmark::kMillisecond);

void BM_ScanMemoModes(benchmark::State& state) {
  ScanOptions opts;
  opts.workers = 2;
  opts.memo = static_cast<MemoMode>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan(ScanRange::for_digits(5), opts));
  }
}
BENCHMARK(BM_ScanMemoModes)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
