#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "altseq/rational.hpp"

namespace altseq {

/// Exact mean of LAS over a uniform random permutation of n elements:
/// 2n/3 + 1/6 for n >= 2, and 1 for n = 1 (outside the formula's range).
Rational perm_mean(std::int64_t n);

/// Exact variance: 8n/45 - 13/180 for n >= 4; for n < 4 the closed form
/// does not apply and the exact value is taken from full enumeration.
Rational perm_variance(std::int64_t n);

/// Asymptotic variance constant of LAS/sqrt(n) for permutations: 8/45.
Rational perm_clt_sigma2();

/// Iterated-logarithm fluctuation constant 4/(3*sqrt(5)) = sqrt(2 * 8/45);
/// the liminf constant is its negative.
double lil_constant();

enum class MomentSource { closed_form, enumeration };

struct ExactMoments {
  std::int64_t n = 0;
  Rational mean;
  Rational variance;
  MomentSource source = MomentSource::closed_form;
};

struct PermEnumeration {
  std::int64_t n = 0;
  std::uint64_t total = 0;                // n!
  std::vector<std::uint64_t> histogram;   // histogram[v] = #permutations with LAS = v
  Rational mean;                          // exact, population moments
  Rational variance;
};

/// Walks all n! permutations (n <= 10) and tallies the exact LAS
/// distribution. This is the independent oracle for the closed forms above.
PermEnumeration enumerate_permutations(std::int64_t n);

/// Probability, under the uniform measure on S_{m+1}, that consecutive
/// entries follow the given comparison pattern, e.g. "<>" is
/// P(t1 < t2 > t3) = 1/3. Exact via enumeration; pattern length <= 8.
Rational pattern_probability(const std::string& pattern);

}  // namespace altseq
