#include "altseq/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "altseq/las.hpp"
#include "altseq/perm_stats.hpp"
#include "altseq/stats.hpp"
#include "altseq/word_stats.hpp"

namespace altseq {

namespace {

std::vector<double> cumulative(std::span<const double> p) {
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  cdf.back() = 1.0;  // absorb float residue so the last symbol is reachable
  return cdf;
}

std::int32_t draw_from_cdf(std::span<const double> cdf, double u) {
  // First bucket whose cumulative strictly exceeds u: zero-width buckets
  // (zero-probability letters) can never be hit, even at exact boundaries.
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return static_cast<std::int32_t>(std::min<std::ptrdiff_t>(it - cdf.begin(),
                                                            static_cast<std::ptrdiff_t>(cdf.size()) - 1)) + 1;
}

// Per-thread scratch so the trial loop never allocates.
struct Scratch {
  std::vector<std::int32_t> ints;
  std::vector<double> reals;
};

class TrialRunner {
 public:
  TrialRunner(const SimConfig& config) : config_(config) {
    if (config.n < 1) throw std::invalid_argument("simulation needs n >= 1");
    if (config.trials < 1) throw std::invalid_argument("simulation needs trials >= 1");
    if (config.n > (std::int64_t{1} << 33))
      throw std::invalid_argument("resource bound exceeded: n > 2^33");
    if (config.trials > (std::int64_t{1} << 40))
      throw std::invalid_argument("resource bound exceeded: trials > 2^40");
    switch (config.model) {
      case Model::permutation:
        break;
      case Model::word:
        if (!config.dist) throw std::invalid_argument("word model needs a distribution");
        letter_cdf_ = cumulative(config.dist->probs());
        break;
      case Model::markov: {
        if (!config.chain) throw std::invalid_argument("markov model needs a chain");
        const MarkovModel& m = *config.chain;
        pi_cdf_ = cumulative(m.pi);
        row_cdf_.resize(static_cast<std::size_t>(m.q) * static_cast<std::size_t>(m.q));
        for (int r = 0; r < m.q; ++r) {
          auto row = cumulative(std::span<const double>(m.P).subspan(
              static_cast<std::size_t>(r) * m.q, static_cast<std::size_t>(m.q)));
          std::copy(row.begin(), row.end(), row_cdf_.begin() + static_cast<std::size_t>(r) * m.q);
        }
        break;
      }
    }
  }

  std::int64_t las_for_trial(std::uint64_t trial, Scratch& scratch) const {
    Xoshiro256pp rng = derive_stream(config_.master_seed, trial);
    const auto n = static_cast<std::size_t>(config_.n);
    switch (config_.model) {
      case Model::permutation:
        if (config_.perm_sampler == PermSampler::shuffle) {
          scratch.ints.resize(n);
          std::iota(scratch.ints.begin(), scratch.ints.end(), 1);
          for (std::size_t i = n; i > 1; --i) {
            const auto j = static_cast<std::size_t>(rng.next_below(i));
            std::swap(scratch.ints[i - 1], scratch.ints[j]);
          }
          return las_distinct_unchecked(scratch.ints);
        } else {
          scratch.reals.resize(n);
          for (;;) {  // redraw on the (measure-zero-ish) tie event
            for (double& v : scratch.reals) v = rng.next_double();
            try {
              return las_distinct_unchecked(
                  std::span<const std::int32_t>(rank_map(scratch.reals).ranks));
            } catch (const std::invalid_argument&) {
            }
          }
        }
      case Model::word: {
        scratch.ints.resize(n);
        for (auto& v : scratch.ints) v = draw_from_cdf(letter_cdf_, rng.next_double());
        return las_alphabet(scratch.ints);
      }
      case Model::markov: {
        scratch.ints.resize(n);
        const int q = config_.chain->q;
        std::int32_t state = draw_from_cdf(pi_cdf_, rng.next_double());
        scratch.ints[0] = state;
        for (std::size_t i = 1; i < n; ++i) {
          const auto row = std::span<const double>(row_cdf_).subspan(
              static_cast<std::size_t>(state - 1) * q, static_cast<std::size_t>(q));
          state = draw_from_cdf(row, rng.next_double());
          scratch.ints[i] = state;
        }
        return las_alphabet(scratch.ints);
      }
    }
    throw std::logic_error("unreachable model");
  }

 private:
  const SimConfig& config_;
  std::vector<double> letter_cdf_;
  std::vector<double> pi_cdf_;
  std::vector<double> row_cdf_;
};

struct Accumulator {
  unsigned __int128 sum = 0;
  unsigned __int128 sum_sq = 0;
  std::int64_t min = 0;
  std::int64_t max = 0;
  bool any = false;
  std::map<std::int64_t, std::uint64_t> histogram;

  void add(std::int64_t las) {
    sum += static_cast<unsigned __int128>(las);
    sum_sq += static_cast<unsigned __int128>(las) * static_cast<unsigned __int128>(las);
    if (!any || las < min) min = las;
    if (!any || las > max) max = las;
    any = true;
    ++histogram[las];
  }

  void merge(const Accumulator& o) {
    if (!o.any) return;
    sum += o.sum;
    sum_sq += o.sum_sq;
    if (!any || o.min < min) min = o.min;
    if (!any || o.max > max) max = o.max;
    any = true;
    for (const auto& [las, count] : o.histogram) histogram[las] += count;
  }
};

}  // namespace

Permutation sample_permutation(std::int64_t n, Xoshiro256pp& rng, PermSampler method) {
  if (n < 1) throw std::invalid_argument("sample_permutation needs n >= 1");
  if (method == PermSampler::shuffle) {
    Permutation p;
    p.ranks.resize(static_cast<std::size_t>(n));
    std::iota(p.ranks.begin(), p.ranks.end(), 1);
    for (std::size_t i = p.ranks.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(rng.next_below(i));
      std::swap(p.ranks[i - 1], p.ranks[j]);
    }
    return p;
  }
  std::vector<double> reals(static_cast<std::size_t>(n));
  for (;;) {
    for (double& v : reals) v = rng.next_double();
    try {
      return rank_map(reals);
    } catch (const std::invalid_argument&) {
    }
  }
}

IntWord sample_word(const Distribution<double>& mu, std::int64_t n, Xoshiro256pp& rng) {
  if (n < 1) throw std::invalid_argument("sample_word needs n >= 1");
  const auto cdf = cumulative(mu.probs());
  IntWord word(static_cast<std::size_t>(n));
  for (auto& v : word) v = draw_from_cdf(cdf, rng.next_double());
  return word;
}

IntWord simulate_markov(const MarkovModel& model, std::int64_t n, Xoshiro256pp& rng) {
  if (n < 1) throw std::invalid_argument("simulate_markov needs n >= 1");
  const auto pi_cdf = cumulative(model.pi);
  std::vector<double> row_cdf(static_cast<std::size_t>(model.q) * static_cast<std::size_t>(model.q));
  for (int r = 0; r < model.q; ++r) {
    auto cdf = cumulative(std::span<const double>(model.P).subspan(
        static_cast<std::size_t>(r) * model.q, static_cast<std::size_t>(model.q)));
    std::copy(cdf.begin(), cdf.end(), row_cdf.begin() + static_cast<std::size_t>(r) * model.q);
  }
  IntWord word(static_cast<std::size_t>(n));
  std::int32_t state = draw_from_cdf(pi_cdf, rng.next_double());
  word[0] = state;
  for (std::size_t i = 1; i < word.size(); ++i) {
    const auto row = std::span<const double>(row_cdf).subspan(
        static_cast<std::size_t>(state - 1) * model.q, static_cast<std::size_t>(model.q));
    state = draw_from_cdf(row, rng.next_double());
    word[i] = state;
  }
  return word;
}

SummaryStats run(const SimConfig& config) {
  TrialRunner runner(config);

  SummaryStats out;
  const auto trials = static_cast<std::uint64_t>(config.trials);
  const std::size_t retained = std::min<std::uint64_t>(trials, config.sample_cap);

  // Standardization: exact CLT centering where a closed form exists.
  switch (config.model) {
    case Model::permutation:
      out.center = perm_mean(config.n).to_double();
      out.scale = std::sqrt(static_cast<double>(config.n) * (8.0 / 45.0));
      out.scale_source = "clt_exact";
      break;
    case Model::word: {
      out.center = exact_mean_iid(*config.dist, static_cast<std::uint64_t>(config.n));
      const double g2 = gamma2_iid(*config.dist);
      out.scale = g2 > 0 ? std::sqrt(static_cast<double>(config.n) * g2) : 0.0;
      out.scale_source = "clt_exact";
      break;
    }
    case Model::markov:
      out.center = static_cast<double>(config.n) * osc_markov(*config.chain);
      out.scale = 0.0;  // no closed-form gamma; filled in empirically below
      out.scale_source = "empirical";
      break;
  }

  std::vector<std::int64_t> kept(retained, 0);
  Accumulator total;

  const int threads = std::max(1, config.threads);
  if (threads == 1) {
    Scratch scratch;
    for (std::uint64_t t = 0; t < trials; ++t) {
      const std::int64_t las = runner.las_for_trial(t, scratch);
      total.add(las);
      if (t < retained) kept[t] = las;
    }
  } else {
    std::mutex merge_mutex;
    std::atomic<std::uint64_t> next_block{0};
    constexpr std::uint64_t kBlock = 64;
    auto worker = [&]() {
      Scratch scratch;
      Accumulator local;
      for (;;) {
        const std::uint64_t begin = next_block.fetch_add(kBlock);
        if (begin >= trials) break;
        const std::uint64_t end = std::min(trials, begin + kBlock);
        for (std::uint64_t t = begin; t < end; ++t) {
          const std::int64_t las = runner.las_for_trial(t, scratch);
          local.add(las);
          if (t < retained) kept[t] = las;  // slot per trial: no contention
        }
      }
      std::lock_guard<std::mutex> lock(merge_mutex);
      total.merge(local);
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  out.count = trials;
  out.min = total.min;
  out.max = total.max;
  out.histogram.assign(total.histogram.begin(), total.histogram.end());
  const double sum = static_cast<double>(total.sum);
  const double sum_sq = static_cast<double>(total.sum_sq);
  const double n_trials = static_cast<double>(trials);
  out.mean = sum / n_trials;
  if (trials > 1) {
    out.variance = (sum_sq - sum * sum / n_trials) / (n_trials - 1.0);
    out.variance = std::max(out.variance, 0.0);
  } else {
    out.variance = 0.0;
    out.degenerate = true;
  }

  if (out.scale_source == "empirical")
    out.scale = out.variance > 0 ? std::sqrt(out.variance) : 0.0;

  if (out.scale > 0) {
    out.standardized.resize(retained);
    for (std::size_t i = 0; i < retained; ++i)
      out.standardized[i] = (static_cast<double>(kept[i]) - out.center) / out.scale;
    if (out.standardized.size() >= 100) out.ks = ks_normal(out.standardized);
  }
  if (config.keep_raw) out.raw = std::move(kept);
  return out;
}

LilTrace lil_trace(std::uint64_t n_max, int checkpoints, std::uint64_t seed) {
  if (n_max < 100) throw std::invalid_argument("lil_trace needs n_max >= 100");
  if (checkpoints < 1) throw std::invalid_argument("lil_trace needs checkpoints >= 1");

  std::vector<std::uint64_t> marks;
  marks.reserve(static_cast<std::size_t>(checkpoints));
  const double ratio =
      checkpoints == 1 ? 1.0
                       : std::pow(static_cast<double>(n_max) / 100.0, 1.0 / (checkpoints - 1));
  double mark = 100.0;
  for (int i = 0; i < checkpoints; ++i) {
    const auto m = std::min<std::uint64_t>(n_max, static_cast<std::uint64_t>(mark));
    if (marks.empty() || m > marks.back()) marks.push_back(m);
    mark *= ratio;
  }
  if (marks.back() != n_max) marks.push_back(n_max);

  LilTrace trace;
  trace.reference = lil_constant();

  Xoshiro256pp rng = derive_stream(seed, 0);
  // Incremental LAS over iid uniforms (distinct a.s. at 53-bit resolution):
  // count gradient sign changes, +1.
  double prev = rng.next_double();
  std::int8_t sign = 1;
  std::int64_t changes = 0;
  std::size_t next_mark = 0;
  bool first = true;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const double v = rng.next_double();
    const std::int8_t s = v > prev ? 1 : -1;
    if (s != sign) {
      ++changes;
      sign = s;
    }
    prev = v;
    if (n == marks[next_mark]) {
      const std::int64_t las = changes + 1;
      const double center = 2.0 * static_cast<double>(n) / 3.0 + 1.0 / 6.0;
      const double denom = std::sqrt(static_cast<double>(n) * std::log(std::log(static_cast<double>(n))));
      const double stat = (static_cast<double>(las) - center) / denom;
      trace.points.push_back({n, las, stat});
      if (first || stat > trace.running_max) trace.running_max = stat;
      if (first || stat < trace.running_min) trace.running_min = stat;
      first = false;
      ++next_mark;
      if (next_mark >= marks.size()) break;
    }
  }
  return trace;
}

SlopeEstimate variance_slope(const SimConfig& base, const std::vector<std::int64_t>& n_grid,
                             std::int64_t trials_per_point) {
  if (n_grid.size() < 2) throw std::invalid_argument("variance_slope needs >= 2 grid points");
  SlopeEstimate est;
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    SimConfig point = base;
    point.n = n_grid[i];
    point.trials = trials_per_point;
    // Decorrelate grid points without touching the caller's seed meaning.
    point.master_seed = splitmix64_mix(base.master_seed + 0x517CC1B727220A95ULL * (i + 1));
    point.sample_cap = 0;
    const SummaryStats stats = run(point);
    est.grid_n.push_back(static_cast<double>(n_grid[i]));
    est.grid_var.push_back(stats.variance);
  }
  const LineFit fit = fit_line(est.grid_n, est.grid_var);
  est.slope = fit.slope;
  est.stderr_ = fit.slope_stderr;
  return est;
}

}  // namespace altseq
