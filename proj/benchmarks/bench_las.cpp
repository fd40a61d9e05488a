#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "altseq/las.hpp"
#include "altseq/montecarlo.hpp"
#include "altseq/rng.hpp"
#include "altseq/word_stats.hpp"

namespace {

void BM_LasDistinct(benchmark::State& state) {
  altseq::Xoshiro256pp rng = altseq::derive_stream(1, 0);
  std::vector<double> values(static_cast<std::size_t>(state.range(0)));
  for (auto& v : values) v = rng.next_double();
  for (auto _ : state) {
    benchmark::DoNotOptimize(altseq::las_distinct_unchecked(values));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LasDistinct)->Arg(1000)->Arg(100000)->Arg(1000000);

void BM_LasAlphabet(benchmark::State& state) {
  altseq::Xoshiro256pp rng = altseq::derive_stream(2, 0);
  std::vector<std::int32_t> word(static_cast<std::size_t>(state.range(0)));
  for (auto& v : word) v = 1 + static_cast<std::int32_t>(rng.next_below(4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(altseq::las_alphabet(word));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LasAlphabet)->Arg(1000)->Arg(100000)->Arg(1000000);

void BM_ShuffleAndLas(benchmark::State& state) {
  altseq::Xoshiro256pp rng = altseq::derive_stream(3, 0);
  const auto n = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) {
    const auto perm = altseq::sample_permutation(n, rng);
    benchmark::DoNotOptimize(altseq::las_distinct_unchecked(perm.ranks));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ShuffleAndLas)->Arg(10000)->Arg(100000);

void BM_WordMomentsTransferMatrix(benchmark::State& state) {
  const auto mu = altseq::Distribution<altseq::Rational>::uniform(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(altseq::word_moments_exact(mu, state.range(0)));
  }
}
BENCHMARK(BM_WordMomentsTransferMatrix)->Arg(20)->Arg(200);

void BM_EnumerateWords(benchmark::State& state) {
  const auto mu = altseq::Distribution<altseq::Rational>::uniform(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(altseq::enumerate_words(mu, state.range(0)));
  }
}
BENCHMARK(BM_EnumerateWords)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
