#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numeric>

#include "altseq/montecarlo.hpp"
#include "altseq/perm_stats.hpp"
#include "altseq/stats.hpp"
#include "altseq/word_stats.hpp"

using namespace altseq;

namespace {

bool same_bits(double a, double b) {
  std::uint64_t ba, bb;
  std::memcpy(&ba, &a, 8);
  std::memcpy(&bb, &b, 8);
  return ba == bb;
}

bool identical(const SummaryStats& a, const SummaryStats& b) {
  if (a.count != b.count || a.min != b.min || a.max != b.max) return false;
  if (!same_bits(a.mean, b.mean) || !same_bits(a.variance, b.variance)) return false;
  if (a.histogram != b.histogram) return false;
  if (a.standardized.size() != b.standardized.size()) return false;
  for (std::size_t i = 0; i < a.standardized.size(); ++i)
    if (!same_bits(a.standardized[i], b.standardized[i])) return false;
  if (a.ks.has_value() != b.ks.has_value()) return false;
  if (a.ks && !same_bits(*a.ks, *b.ks)) return false;
  return true;
}

}  // namespace

TEST_CASE("stream derivation is deterministic and trial-separated") {
  Xoshiro256pp a = derive_stream(42, 7);
  Xoshiro256pp b = derive_stream(42, 7);
  Xoshiro256pp c = derive_stream(42, 8);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 64; ++i) {
    const auto va = a.next();
    all_equal = all_equal && (va == b.next());
    any_diff = any_diff || (va != c.next());
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("next_below is unbiased across a small range") {
  Xoshiro256pp rng = derive_stream(1, 0);
  std::vector<std::uint64_t> counts(6, 0);
  const int draws = 600000;
  for (int i = 0; i < draws; ++i) ++counts[rng.next_below(6)];
  const std::vector<double> expected(6, 1.0 / 6.0);
  CHECK(chi_square_gof_pvalue(counts, expected) > 0.001);
}

TEST_CASE("sample_permutation is uniform on S_3 (both samplers)") {
  for (auto method : {PermSampler::shuffle, PermSampler::ranks}) {
    Xoshiro256pp rng = derive_stream(2024, method == PermSampler::shuffle ? 0 : 1);
    std::vector<std::uint64_t> counts(6, 0);
    const int draws = 600000;
    for (int i = 0; i < draws; ++i) {
      const Permutation p = sample_permutation(3, rng, method);
      const int code = (p.ranks[0] - 1) * 2 + (p.ranks[1] > p.ranks[2] ? 1 : 0);
      ++counts[static_cast<std::size_t>(code)];
    }
    const std::vector<double> expected(6, 1.0 / 6.0);
    CHECK(chi_square_gof_pvalue(counts, expected) > 0.001);
  }
}

TEST_CASE("sampler paths give matching LAS histograms at n=5") {
  const auto exact = enumerate_permutations(5);
  for (auto method : {PermSampler::shuffle, PermSampler::ranks}) {
    Xoshiro256pp rng = derive_stream(8888, method == PermSampler::shuffle ? 0 : 1);
    std::vector<std::uint64_t> counts(6, 0);
    const int draws = 200000;
    for (int i = 0; i < draws; ++i) {
      const Permutation p = sample_permutation(5, rng, method);
      counts[static_cast<std::size_t>(las_distinct_unchecked(p.ranks) - 1)]++;
    }
    std::vector<double> expected(6);
    for (int v = 1; v <= 5; ++v)
      expected[static_cast<std::size_t>(v - 1)] =
          static_cast<double>(exact.histogram[static_cast<std::size_t>(v)]) /
          static_cast<double>(exact.total);
    expected[5] = 0.0;
    counts.resize(5);
    expected.resize(5);
    CHECK(chi_square_gof_pvalue(counts, expected) > 0.001);
  }
}

TEST_CASE("sample_permutation n=1 is always the identity") {
  for (auto method : {PermSampler::shuffle, PermSampler::ranks}) {
    Xoshiro256pp rng = derive_stream(3, 0);
    for (int i = 0; i < 20; ++i)
      CHECK(sample_permutation(1, rng, method).ranks == std::vector<std::int32_t>{1});
  }
}

TEST_CASE("shuffle and rank-map samplers are statistically indistinguishable") {
  std::vector<std::uint64_t> shuffle_counts(6, 0), ranks_counts(6, 0);
  Xoshiro256pp r1 = derive_stream(4040, 0), r2 = derive_stream(4041, 0);
  const int draws = 150000;
  for (int i = 0; i < draws; ++i) {
    shuffle_counts[static_cast<std::size_t>(
        las_distinct_unchecked(sample_permutation(6, r1, PermSampler::shuffle).ranks) - 1)]++;
    ranks_counts[static_cast<std::size_t>(
        las_distinct_unchecked(sample_permutation(6, r2, PermSampler::ranks).ranks) - 1)]++;
  }
  CHECK(chi_square_two_sample_pvalue(shuffle_counts, ranks_counts) > 0.001);
}

TEST_CASE("sample_word letter frequencies and determinism") {
  const Distribution<double> mu({0.2, 0.5, 0.3});
  Xoshiro256pp rng = derive_stream(55, 0);
  const auto word = sample_word(mu, 100000, rng);
  std::vector<std::uint64_t> counts(3, 0);
  for (auto v : word) ++counts[static_cast<std::size_t>(v - 1)];
  CHECK(chi_square_gof_pvalue(counts, mu.probs()) > 0.001);

  Xoshiro256pp r1 = derive_stream(55, 0), r2 = derive_stream(55, 0);
  CHECK(sample_word(mu, 100, r1) == sample_word(mu, 100, r2));

  const Distribution<double> pm({1.0, 0.0});
  Xoshiro256pp r3 = derive_stream(55, 1);
  const auto constant = sample_word(pm, 50, r3);
  CHECK(std::all_of(constant.begin(), constant.end(), [](auto v) { return v == 1; }));
}

TEST_CASE("run(): estimator sanity on the exhaustively known n=5 model") {
  SimConfig config;
  config.model = Model::permutation;
  config.n = 5;
  config.trials = 200000;
  config.master_seed = 31;
  config.sample_cap = 0;
  const SummaryStats stats = run(config);

  const auto exact = enumerate_permutations(5);
  const double mean = exact.mean.to_double();
  const double var = exact.variance.to_double();
  const double se = std::sqrt(var / static_cast<double>(config.trials));
  CHECK(std::abs(stats.mean - mean) < 4 * se);
  CHECK(stats.min >= 1);
  CHECK(stats.max <= 5);
}

TEST_CASE("run(): thread counts do not change the result") {
  for (auto model : {Model::permutation, Model::word, Model::markov}) {
    SimConfig config;
    config.model = model;
    config.n = 500;
    config.trials = 600;
    config.master_seed = 12345;
    config.sample_cap = 600;
    if (model == Model::word) config.dist = Distribution<double>::uniform(3);
    if (model == Model::markov) config.chain = make_markov({{0.9, 0.1}, {0.1, 0.9}});

    config.threads = 1;
    const SummaryStats base = run(config);
    for (int threads : {2, 4, 16}) {
      config.threads = threads;
      CHECK(identical(base, run(config)));
    }
  }
}

TEST_CASE("run(): degenerate single trial") {
  SimConfig config;
  config.model = Model::permutation;
  config.n = 100;
  config.trials = 1;
  config.master_seed = 5;
  const SummaryStats stats = run(config);
  CHECK(stats.degenerate);
  CHECK(stats.variance == 0.0);
  CHECK(stats.count == 1);
}

TEST_CASE("run(): invalid configs throw") {
  SimConfig config;
  config.model = Model::word;
  config.n = 10;
  config.trials = 10;
  CHECK_THROWS_AS(run(config), std::invalid_argument);  // missing distribution
  config.model = Model::permutation;
  config.trials = 0;
  CHECK_THROWS_AS(run(config), std::invalid_argument);
  config.trials = 1;
  config.n = 0;
  CHECK_THROWS_AS(run(config), std::invalid_argument);
}

TEST_CASE("reduced-scale CLT smoke: permutation KS is small") {
  SimConfig config;
  config.model = Model::permutation;
  config.n = 2500;
  config.trials = 20000;
  config.master_seed = 606;
  config.sample_cap = 20000;
  config.threads = 2;
  const SummaryStats stats = run(config);
  REQUIRE(stats.ks.has_value());
  CHECK(*stats.ks < 0.04);
  CHECK(stats.center == doctest::Approx(perm_mean(2500).to_double()));
}

TEST_CASE("lil_trace shape, determinism, finiteness") {
  const LilTrace t1 = lil_trace(200000, 12, 9);
  const LilTrace t2 = lil_trace(200000, 12, 9);
  REQUIRE(!t1.points.empty());
  CHECK(t1.points.back().n == 200000);
  CHECK(t1.reference == doctest::Approx(0.5962847940).epsilon(1e-9));
  REQUIRE(t1.points.size() == t2.points.size());
  for (std::size_t i = 0; i < t1.points.size(); ++i) {
    CHECK(t1.points[i].las == t2.points[i].las);
    CHECK(std::isfinite(t1.points[i].statistic));
  }
  CHECK(t1.running_max >= t1.running_min);
}

TEST_CASE("variance slope recovers 8/45 for permutations") {
  SimConfig base;
  base.model = Model::permutation;
  base.master_seed = 1001;
  const SlopeEstimate est = variance_slope(base, {200, 400, 600, 800, 1000}, 40000);
  CHECK(std::abs(est.slope - 8.0 / 45.0) < 5 * est.stderr_ + 0.005);
}

TEST_CASE("variance slope is near zero for a point mass") {
  SimConfig base;
  base.model = Model::word;
  base.dist = Distribution<double>({1.0, 0.0});
  base.master_seed = 6;
  const SlopeEstimate est = variance_slope(base, {100, 200, 300}, 500);
  CHECK(est.slope == doctest::Approx(0.0).epsilon(1e-12));
}
