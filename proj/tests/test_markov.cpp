#include <doctest.h>

#include <cmath>
#include <numeric>

#include "altseq/distribution.hpp"
#include "altseq/markov.hpp"
#include "altseq/montecarlo.hpp"
#include "altseq/rng.hpp"

using namespace altseq;

namespace {

MarkovModel sticky2() { return make_markov({{0.9, 0.1}, {0.1, 0.9}}); }

MarkovModel random_chain(int q, Xoshiro256pp& rng) {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(q));
  for (auto& row : rows) {
    row.resize(static_cast<std::size_t>(q));
    double total = 0;
    for (auto& v : row) {
      v = 0.05 + rng.next_double();
      total += v;
    }
    for (auto& v : row) v /= total;
  }
  return make_markov(rows);
}

double residual(std::size_t m, const std::vector<double>& P, const std::vector<double>& x) {
  double worst = 0;
  for (std::size_t j = 0; j < m; ++j) {
    double acc = 0;
    for (std::size_t i = 0; i < m; ++i) acc += x[i] * P[i * m + j];
    worst = std::max(worst, std::abs(acc - x[j]));
  }
  return worst;
}

}  // namespace

TEST_CASE("model validation") {
  CHECK_THROWS_AS(make_markov({{0.5, 0.4}, {0.5, 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(make_markov({{1.2, -0.2}, {0.5, 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(make_markov({{1.0, 0.0}, {0.0, 1.0}}), std::invalid_argument);  // reducible
  const auto model = sticky2();
  CHECK(model.irreducible);
  CHECK(model.aperiodic);
}

TEST_CASE("stationary distribution examples") {
  const auto symmetric = sticky2();
  CHECK(symmetric.stationary_at(1) == doctest::Approx(0.5).epsilon(1e-12));

  // All rows equal mu: pi = mu.
  const std::vector<double> mu = {0.2, 0.5, 0.3};
  const auto iid_chain = make_markov({mu, mu, mu});
  for (int s = 1; s <= 3; ++s)
    CHECK(iid_chain.stationary_at(s) ==
          doctest::Approx(mu[static_cast<std::size_t>(s - 1)]).epsilon(1e-12));

  Xoshiro256pp rng = derive_stream(4242, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const int q = 2 + static_cast<int>(rng.next_below(5));
    const auto model = random_chain(q, rng);
    CHECK(residual(static_cast<std::size_t>(q), model.P, model.pi) <= 1e-10);
    CHECK(std::accumulate(model.pi.begin(), model.pi.end(), 0.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("periodic chain is flagged") {
  const auto flip = make_markov({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(flip.irreducible);
  CHECK_FALSE(flip.aperiodic);
  CHECK_THROWS_AS(augment_pair(flip), std::invalid_argument);
}

TEST_CASE("augmented pair stationary formulas on the sticky chain") {
  const auto aug = augment_pair(sticky2());
  // states: (1,+) (1,-) (2,+) (2,-)
  CHECK(aug.claimed_pi[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(aug.claimed_pi[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(aug.claimed_pi[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(aug.claimed_pi[3] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(residual(4, aug.P, aug.claimed_pi) <= 1e-12);
}

TEST_CASE("augmented triple stationary formulas on the sticky chain") {
  const auto aug = augment_triple(sticky2());
  // (1,+,-) carries the down-turn mass 0.05
  const auto idx = [](int r, int yp, int y) {
    return static_cast<std::size_t>((r - 1) * 4 + (yp < 0 ? 2 : 0) + (y < 0 ? 1 : 0));
  };
  CHECK(aug.claimed_pi[idx(1, +1, -1)] == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(aug.claimed_pi[idx(2, -1, +1)] == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(std::accumulate(aug.claimed_pi.begin(), aug.claimed_pi.end(), 0.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(residual(8, aug.P, aug.claimed_pi) <= 1e-12);
}

TEST_CASE("fuzzed chains: claimed measures are fixed points") {
  Xoshiro256pp rng = derive_stream(31415, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const int q = 2 + static_cast<int>(rng.next_below(5));
    const auto model = random_chain(q, rng);

    const auto pair = augment_pair(model);
    CHECK(residual(static_cast<std::size_t>(2 * q), pair.P, pair.claimed_pi) <= 1e-10);
    for (int r = 1; r <= q; ++r)
      CHECK(pair.claimed_pi[static_cast<std::size_t>(2 * (r - 1))] +
                pair.claimed_pi[static_cast<std::size_t>(2 * (r - 1) + 1)] ==
            doctest::Approx(model.stationary_at(r)).epsilon(1e-10));

    const auto triple = augment_triple(model);
    CHECK(residual(static_cast<std::size_t>(4 * q), triple.P, triple.claimed_pi) <= 1e-10);
    CHECK(std::accumulate(triple.claimed_pi.begin(), triple.claimed_pi.end(), 0.0) ==
          doctest::Approx(1.0).epsilon(1e-10));

    // Triple marginalized over y_prev equals the pair measure.
    for (int r = 1; r <= q; ++r)
      for (int y : {+1, -1}) {
        const std::size_t pair_idx = static_cast<std::size_t>(2 * (r - 1) + (y < 0 ? 1 : 0));
        const std::size_t base = static_cast<std::size_t>(4 * (r - 1)) + (y < 0 ? 1 : 0);
        CHECK(triple.claimed_pi[base] + triple.claimed_pi[base + 2] ==
              doctest::Approx(pair.claimed_pi[pair_idx]).epsilon(1e-10));
      }
  }
}

TEST_CASE("triple down-turn mass equals half the iid oscillation on rows-equal chains") {
  const std::vector<double> mu = {0.15, 0.45, 0.4};
  const auto chain = make_markov({mu, mu, mu});
  const auto triple = augment_triple(chain);
  double down_turn = 0, up_turn = 0;
  for (int r = 1; r <= 3; ++r) {
    down_turn += triple.claimed_pi[static_cast<std::size_t>((r - 1) * 4 + 1)];  // (r,+1,-1)
    up_turn += triple.claimed_pi[static_cast<std::size_t>((r - 1) * 4 + 2)];    // (r,-1,+1)
  }
  const double half_osc = osc(Distribution<double>(mu)) / 2.0;
  CHECK(down_turn == doctest::Approx(half_osc).epsilon(1e-12));
  CHECK(up_turn == doctest::Approx(half_osc).epsilon(1e-12));
}

TEST_CASE("markov oscillation values") {
  CHECK(osc_markov(sticky2()) == doctest::Approx(0.1).epsilon(1e-12));

  // rows equal mu reduces to the iid oscillation
  const std::vector<double> mu = {0.25, 0.35, 0.4};
  const auto chain = make_markov({mu, mu, mu});
  CHECK(osc_markov(chain) == doctest::Approx(osc(Distribution<double>(mu))).epsilon(1e-12));

  const auto uniform_rows = make_markov({{0.5, 0.5}, {0.5, 0.5}});
  CHECK(osc_markov(uniform_rows) == doctest::Approx(0.5).epsilon(1e-12));

  Xoshiro256pp rng = derive_stream(2718, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const auto model = random_chain(2 + static_cast<int>(rng.next_below(5)), rng);
    const auto parts = osc_markov_parts(model);
    CHECK(std::abs(parts.plus - parts.minus) <= 1e-12);
  }
}

TEST_CASE("markov simulation determinism and link to the oscillation") {
  const auto model = sticky2();
  Xoshiro256pp a = derive_stream(5, 0);
  Xoshiro256pp b = derive_stream(5, 0);
  CHECK(simulate_markov(model, 200, a) == simulate_markov(model, 200, b));

  Xoshiro256pp rng = derive_stream(5, 1);
  const auto path = simulate_markov(model, 200000, rng);
  const double ratio = static_cast<double>(las_via_y(path)) / static_cast<double>(path.size());
  // 3 sigma at gamma^2 ~ 0.09 for this chain
  CHECK(std::abs(ratio - 0.1) < 3.0 * std::sqrt(0.09 / 200000.0) + 1e-3);
}

TEST_CASE("letter frequencies of the rows-equal chain match mu") {
  const std::vector<double> mu = {0.2, 0.5, 0.3};
  const auto chain = make_markov({mu, mu, mu});
  Xoshiro256pp rng = derive_stream(12, 0);
  const auto path = simulate_markov(chain, 100000, rng);
  std::vector<std::uint64_t> counts(3, 0);
  for (auto v : path) ++counts[static_cast<std::size_t>(v - 1)];
  for (int s = 0; s < 3; ++s) {
    const double expect = mu[static_cast<std::size_t>(s)] * 100000.0;
    const double sd = std::sqrt(expect * (1 - mu[static_cast<std::size_t>(s)]));
    CHECK(std::abs(static_cast<double>(counts[static_cast<std::size_t>(s)]) - expect) < 5 * sd);
  }
}
