#include <doctest.h>

#include <cmath>

#include "altseq/distribution.hpp"
#include "altseq/rng.hpp"
#include "altseq/verify.hpp"
#include "altseq/word_stats.hpp"

using namespace altseq;

namespace {

Distribution<Rational> point_mass_first(int q) {
  std::vector<Rational> p(static_cast<std::size_t>(q), Rational(0));
  p[0] = Rational(1);
  return Distribution<Rational>(std::move(p));
}

Distribution<Rational> fuzzed_rational(int q, Xoshiro256pp& rng) {
  const int denom = q + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(17)));
  std::vector<int> counts(static_cast<std::size_t>(q), 1);
  for (int ball = 0; ball < denom - q; ++ball)
    ++counts[static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(q)))];
  std::vector<Rational> probs;
  for (int c : counts) probs.emplace_back(c, denom);
  return Distribution<Rational>(std::move(probs));
}

}  // namespace

TEST_CASE("distribution validation and derived masses") {
  CHECK_THROWS_AS(Distribution<double>({0.5, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(Distribution<double>({1.5, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(Distribution<Rational>({Rational(1, 2), Rational(1, 3)}),
                  std::invalid_argument);

  const auto mu = Distribution<Rational>::uniform(4);
  for (int x = 1; x <= 4; ++x)
    CHECK(mu.below(x) + mu.above(x) + mu.p(x) == Rational(1));
  CHECK(mu.kappa() == Rational(1, 4));
  CHECK_THROWS_AS(mu.p(0), std::out_of_range);
  CHECK_THROWS_AS(mu.p(5), std::out_of_range);
}

TEST_CASE("oscillation values") {
  const auto u2 = Distribution<Rational>::uniform(2);
  CHECK(osc_at(u2, 1) == Rational(1, 2));
  CHECK(osc(u2) == Rational(1, 2));

  const auto u3 = Distribution<Rational>::uniform(3);
  CHECK(osc_at(u3, 2) == Rational(1, 3));
  CHECK(osc(u3) == Rational(5, 9));

  CHECK(osc(point_mass_first(3)) == Rational(0));
  CHECK(osc_at(point_mass_first(1), 1) == Rational(0));
}

TEST_CASE("uniform oscillation closed form for q = 2..64") {
  for (int q = 2; q <= 64; ++q) {
    const auto mu = Distribution<Rational>::uniform(q);
    CHECK(osc(mu) == Rational(2, 3) - Rational(1, 3 * static_cast<long long>(q)));
  }
}

TEST_CASE("oscillation bounds") {
  const auto u2 = Distribution<Rational>::uniform(2);
  const auto [lo, hi] = osc_bounds(u2);
  CHECK(lo == Rational(1, 4));
  CHECK(hi == Rational(1, 2));
  CHECK(osc(u2) == hi);  // uniform q=2 meets the upper bound

  const auto pm = point_mass_first(2);
  const auto [plo, phi] = osc_bounds(pm);
  CHECK(plo == Rational(0));
  CHECK(phi == Rational(0));

  Xoshiro256pp rng = derive_stream(5150, 0);
  for (int trial = 0; trial < 3000; ++trial) {
    const int q = 2 + static_cast<int>(rng.next_below(7));
    std::vector<double> p(static_cast<std::size_t>(q));
    double total = 0;
    for (auto& v : p) {
      v = -std::log(1.0 - rng.next_double());
      total += v;
    }
    for (auto& v : p) v /= total;
    const Distribution<double> mu(p);
    const auto [lower, upper] = osc_bounds(mu);
    const double value = osc(mu);
    CHECK(value >= lower - 1e-12);
    CHECK(value <= upper + 1e-12);
  }
}

TEST_CASE("exact mean identity against enumeration") {
  const auto u2 = Distribution<Rational>::uniform(2);
  CHECK(exact_mean_iid(u2, 2) == Rational(5, 4));
  CHECK(enumerate_words(u2, 2).mean == Rational(5, 4));

  const auto u3 = Distribution<Rational>::uniform(3);
  CHECK(enumerate_words(u3, 6).mean == exact_mean_iid(u3, 6));

  Xoshiro256pp rng = derive_stream(777, 0);
  for (int trial = 0; trial < 8; ++trial) {
    const int q = 2 + static_cast<int>(rng.next_below(3));
    const auto mu = fuzzed_rational(q, rng);
    for (int n = 1; n <= 6; ++n) CHECK(enumerate_words(mu, n).mean == exact_mean_iid(mu, n));
  }
}

TEST_CASE("exact mean ratio approaches the oscillation") {
  const auto u5 = Distribution<double>::uniform(5);
  const std::uint64_t n = 1000000;
  const double limit = 2.0 / 3.0 - 1.0 / 15.0;
  CHECK(std::abs(exact_mean_iid(u5, n) / static_cast<double>(n) - limit) < 1e-6);
}

TEST_CASE("enumerate_words basics and guard") {
  const auto u2 = Distribution<Rational>::uniform(2);
  const auto one = enumerate_words(u2, 1);
  CHECK(one.mean == Rational(1));
  CHECK(one.variance == Rational(0));

  const auto pm = point_mass_first(3);
  for (int n = 1; n <= 5; ++n) CHECK(enumerate_words(pm, n).mean == Rational(1));

  CHECK_THROWS_AS(enumerate_words(Distribution<Rational>::uniform(4), 13),
                  std::invalid_argument);
}

TEST_CASE("transfer-matrix moments equal enumeration") {
  Xoshiro256pp rng = derive_stream(31337, 0);
  for (int trial = 0; trial < 6; ++trial) {
    const int q = 2 + static_cast<int>(rng.next_below(3));
    const auto mu = fuzzed_rational(q, rng);
    for (int n = 1; n <= 7; ++n) {
      const auto tm = word_moments_exact(mu, n);
      const auto brute = enumerate_words(mu, n);
      CHECK(tm.mean == brute.mean);
      CHECK(tm.variance == brute.variance);
    }
  }
}

TEST_CASE("gamma2 candidates at the documented points") {
  CHECK(gamma2_iid(Distribution<double>::uniform(2)) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(gamma2_uniform_closed(2) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  // Large q: both tend to the permutation constant 8/45.
  CHECK(gamma2_iid(Distribution<double>::uniform(512)) ==
        doctest::Approx(8.0 / 45.0).epsilon(1e-2));
  CHECK(gamma2_uniform_closed(100000) == doctest::Approx(8.0 / 45.0).epsilon(1e-4));
  // Degenerate distribution has no fluctuation.
  CHECK(gamma2_iid(Distribution<double>({0.0, 1.0, 0.0})) == 0.0);
}

TEST_CASE("gamma2 series estimate agrees with the double-sum formula") {
  Xoshiro256pp rng = derive_stream(2025, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const int q = 2 + static_cast<int>(rng.next_below(5));
    std::vector<double> p(static_cast<std::size_t>(q));
    double total = 0;
    for (auto& v : p) {
      v = 0.05 + rng.next_double();
      total += v;
    }
    for (auto& v : p) v /= total;
    const Distribution<double> mu(p);
    const double direct = gamma2_iid(mu);
    CHECK(direct >= 0.0);
    CHECK(gamma2_series(mu) == doctest::Approx(direct).epsilon(1e-9));
  }
}

TEST_CASE("gamma2 adjudication picks the double-sum formula") {
  const auto adj = adjudicate_gamma2(14);
  CHECK(adj.converged);
  CHECK(adj.double_sum_wins);
  CHECK(adj.final_diff == doctest::Approx(0.25).epsilon(1e-3));
}

TEST_CASE("exact variance slopes converge to the double-sum gamma2 beyond q=2") {
  const auto slope_at = [](const Distribution<Rational>& mu, int n) {
    return (word_moments_exact(mu, n).variance - word_moments_exact(mu, n - 1).variance)
        .to_double();
  };
  for (int q : {4, 5}) {
    const auto mu = Distribution<Rational>::uniform(q);
    const double formula = gamma2_iid(to_double_dist(mu));
    CHECK(slope_at(mu, 20) == doctest::Approx(formula).epsilon(1e-9));
  }
  const Distribution<Rational> skewed({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  CHECK(slope_at(skewed, 20) ==
        doctest::Approx(gamma2_iid(to_double_dist(skewed))).epsilon(1e-4));
}

TEST_CASE("mixing bound values") {
  const auto u2 = Distribution<double>::uniform(2);
  CHECK(mixing_bound(u2, 4) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(mixing_bound(u2, 1) == 1.0);  // clamped
  const Distribution<double> skew({0.9, 0.1});
  CHECK(mixing_bound(skew, 50) == doctest::Approx(4.0 * std::pow(0.9, 49)).epsilon(1e-12));
}
