#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "altseq/stats.hpp"

using namespace altseq;

TEST_CASE("normal cdf reference points") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(normal_cdf(1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-12));
  CHECK(normal_cdf(-1.959963984540054) == doctest::Approx(0.025).epsilon(1e-10));
  CHECK(normal_cdf(6.0) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("ks distance on an exact quantile grid is tiny") {
  const int m = 5000;
  std::vector<double> sample(m);
  for (int i = 0; i < m; ++i) {
    // invert Phi by bisection on the grid point (i+0.5)/m
    const double target = (i + 0.5) / m;
    double lo = -10, hi = 10;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      (normal_cdf(mid) < target ? lo : hi) = mid;
    }
    sample[static_cast<std::size_t>(i)] = 0.5 * (lo + hi);
  }
  CHECK(ks_normal(sample) <= 1.0 / m + 1e-6);
}

TEST_CASE("ks distance of a constant sample is one half") {
  const std::vector<double> sample(200, 0.0);
  CHECK(ks_normal(sample) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("ks rejects tiny samples") {
  const std::vector<double> sample(50, 0.0);
  CHECK_THROWS_AS(ks_normal(sample), std::invalid_argument);
}

TEST_CASE("chi-square survival function reference values") {
  // P(X > x) for known quantiles
  CHECK(chi_square_sf(3.841458820694124, 1) == doctest::Approx(0.05).epsilon(1e-9));
  CHECK(chi_square_sf(11.070497693516351, 5) == doctest::Approx(0.05).epsilon(1e-9));
  CHECK(chi_square_sf(0.0, 3) == doctest::Approx(1.0));
}

TEST_CASE("two-sample chi-square on identical counts is 1") {
  const std::vector<std::uint64_t> a = {100, 200, 300};
  CHECK(chi_square_two_sample_pvalue(a, a) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("line fit recovers slope and intercept") {
  const std::vector<double> x = {1, 2, 3, 4, 5};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * v + 2.0);
  const LineFit fit = fit_line(x, y);
  CHECK(fit.slope == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.slope_stderr == doctest::Approx(0.0).epsilon(1e-10));
}
