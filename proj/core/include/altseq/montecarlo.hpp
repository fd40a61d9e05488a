#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altseq/distribution.hpp"
#include "altseq/markov.hpp"
#include "altseq/rng.hpp"
#include "altseq/sequence.hpp"

namespace altseq {

enum class Model { permutation, word, markov };

enum class PermSampler { shuffle, ranks };

/// One Monte Carlo experiment: `trials` independent sequences of length `n`
/// from the chosen model, LAS of each, summary statistics of the sample.
struct SimConfig {
  Model model = Model::permutation;
  std::int64_t n = 1;
  std::int64_t trials = 1;
  std::uint64_t master_seed = 0;
  PermSampler perm_sampler = PermSampler::shuffle;
  std::optional<Distribution<double>> dist;  // word model
  std::optional<MarkovModel> chain;          // markov model
  std::size_t sample_cap = 1u << 17;         // standardized/raw values retained
  bool keep_raw = false;
  int threads = 1;
};

struct SummaryStats {
  std::uint64_t count = 0;
  double mean = 0;
  double variance = 0;  // unbiased; 0 with degenerate=true when count == 1
  std::int64_t min = 0;
  std::int64_t max = 0;
  bool degenerate = false;
  std::vector<std::pair<std::int64_t, std::uint64_t>> histogram;  // (las, count), sorted

  // Standardization (LAS - center) / scale applied to the retained sample.
  double center = 0;
  double scale = 0;
  std::string scale_source;  // "clt_exact" or "empirical"
  std::vector<double> standardized;
  std::vector<std::int64_t> raw;  // populated when keep_raw

  std::optional<double> ks;  // KS distance to N(0,1), when sample >= 100
};

/// Runs the experiment. Trial t always uses derive_stream(master_seed, t)
/// and the accumulators are order-insensitive (integer sums), so the result
/// is bit-identical for any thread count.
SummaryStats run(const SimConfig& config);

/// Uniform random permutation: Fisher-Yates, or n iid uniforms pushed
/// through rank_map. Both induce the uniform measure on S_n.
Permutation sample_permutation(std::int64_t n, Xoshiro256pp& rng,
                               PermSampler method = PermSampler::shuffle);

/// n iid letters from mu, inverse-CDF per letter.
IntWord sample_word(const Distribution<double>& mu, std::int64_t n, Xoshiro256pp& rng);

/// Length-n trajectory of the chain: first letter from pi, then transitions.
IntWord simulate_markov(const MarkovModel& model, std::int64_t n, Xoshiro256pp& rng);

struct LilPoint {
  std::uint64_t n = 0;
  std::int64_t las = 0;
  double statistic = 0;  // (LAS - exact mean) / sqrt(n log log n)
};

struct LilTrace {
  std::vector<LilPoint> points;
  double running_max = 0;
  double running_min = 0;
  double reference = 0;  // 4/(3 sqrt 5); the limsup constant for permutations
};

/// Single-trajectory diagnostic for the iterated-logarithm scale: one
/// permutation-model path (iid uniforms, incremental O(1) LAS updates)
/// sampled at geometrically spaced checkpoints. Reporting only; the LIL
/// limit is far beyond any finite run, so nothing is asserted.
LilTrace lil_trace(std::uint64_t n_max, int checkpoints, std::uint64_t seed);

struct SlopeEstimate {
  double slope = 0;
  double stderr_ = 0;
  std::vector<double> grid_n;
  std::vector<double> grid_var;
};

/// Estimates the variance slope gamma^2 by regressing empirical Var(LAS)
/// on n over a grid. `base` supplies the model (n is overridden per point).
SlopeEstimate variance_slope(const SimConfig& base, const std::vector<std::int64_t>& n_grid,
                             std::int64_t trials_per_point);

}  // namespace altseq
