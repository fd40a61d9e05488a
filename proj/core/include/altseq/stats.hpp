#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace altseq {

/// Standard normal CDF via erfc; absolute error well below 1e-12 (libm
/// erfc is sub-ulp on this range).
double normal_cdf(double x);

/// One-sample Kolmogorov-Smirnov distance sup_x |F_hat(x) - Phi(x)| against
/// the standard normal. Requires at least 100 points.
double ks_normal(std::span<const double> sample);

/// Upper tail P(X > x) of a chi-square with dof degrees of freedom
/// (regularized incomplete gamma Q(dof/2, x/2)).
double chi_square_sf(double x, double dof);

/// Pearson statistic and p-value for observed counts vs expected
/// probabilities (expected[i] scaled by the total count).
double chi_square_gof_pvalue(std::span<const std::uint64_t> observed,
                             std::span<const double> expected_probs);

/// Two-sample chi-square homogeneity p-value over matched count vectors.
double chi_square_two_sample_pvalue(std::span<const std::uint64_t> a,
                                    std::span<const std::uint64_t> b);

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double slope_stderr = 0;
};

/// Ordinary least squares y on x with the usual slope standard error.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace altseq
