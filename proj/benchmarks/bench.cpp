#include <benchmark/benchmark.h>

#include "fliess/antipode.hpp"
#include "fliess/devlin.hpp"
#include "fliess/series.hpp"

using namespace fliess;

namespace {

// Alternating words stress the shuffle recursion without memo hits between
// iterations (the cache key is the word pair, so reuse within one run is
// representative of real workloads).
Word alternating(int len) {
  std::vector<Letter> letters(len);
  for (int i = 0; i < len; ++i) letters[i] = i % 2 ? Letter::x0 : Letter::x1;
  return Word(std::move(letters));
}

void bm_shuffle(benchmark::State& state) {
  const Word u = alternating(int(state.range(0)));
  const Word v = alternating(int(state.range(0)) + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shuffle_right_recursion(u, v));
  }
}
BENCHMARK(bm_shuffle)->DenseRange(2, 6);

void bm_shuffle_series(benchmark::State& state) {
  const Series c = ferfera(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(shuffle_series(c, c));
  }
}
BENCHMARK(bm_shuffle_series)->DenseRange(4, 8);

void bm_antipode(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) {
    HElement acc;
    for (const Word& eta : words_of_degree(n))
      acc += antipode_direct(eta);  // uncached route, full recomputation
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(bm_antipode)->DenseRange(4, 8);

void bm_group_inverse(benchmark::State& state) {
  const int n = int(state.range(0));
  const Series c = ferfera(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_inverse_fixpoint(c, n));
  }
}
BENCHMARK(bm_group_inverse)->DenseRange(4, 7);

void bm_devlin(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(devlin_recursive(n));
  }
}
BENCHMARK(bm_devlin)->DenseRange(6, 12)->RangeMultiplier(2);

}  // namespace

BENCHMARK_MAIN();
