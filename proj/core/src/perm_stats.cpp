#include "altseq/perm_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "altseq/las.hpp"

namespace altseq {

Rational perm_mean(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("perm_mean needs n >= 1");
  if (n == 1) return Rational(1);
  return Rational(2 * n, 3) + Rational(1, 6);
}

Rational perm_variance(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("perm_variance needs n >= 1");
  if (n < 4) return enumerate_permutations(n).variance;
  return Rational(8 * n, 45) - Rational(13, 180);
}

Rational perm_clt_sigma2() { return Rational(8, 45); }

double lil_constant() { return 4.0 / (3.0 * std::sqrt(5.0)); }

PermEnumeration enumerate_permutations(std::int64_t n) {
  constexpr std::int64_t kMaxN = 10;
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("enumerate_permutations supports 1 <= n <= 10 (n! blowup)");

  std::vector<std::int32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1);

  PermEnumeration out;
  out.n = n;
  out.histogram.assign(static_cast<std::size_t>(n) + 1, 0);
  std::uint64_t sum = 0, sum_sq = 0;
  do {
    const auto las = las_distinct_unchecked(perm);
    ++out.histogram[static_cast<std::size_t>(las)];
    sum += static_cast<std::uint64_t>(las);
    sum_sq += static_cast<std::uint64_t>(las) * static_cast<std::uint64_t>(las);
    ++out.total;
  } while (std::next_permutation(perm.begin(), perm.end()));

  const Rational total(static_cast<long long>(out.total));
  out.mean = Rational(static_cast<long long>(sum)) / total;
  out.variance = Rational(static_cast<long long>(sum_sq)) / total - out.mean * out.mean;
  return out;
}

Rational pattern_probability(const std::string& pattern) {
  if (pattern.empty() || pattern.size() > 8)
    throw std::invalid_argument("pattern length must be 1..8");
  for (char c : pattern)
    if (c != '<' && c != '>') throw std::invalid_argument("pattern chars must be '<' or '>'");

  const int n = static_cast<int>(pattern.size()) + 1;
  std::vector<std::int32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t hits = 0, total = 0;
  do {
    bool match = true;
    for (int i = 0; match && i + 1 < n; ++i) {
      const bool up = perm[i] < perm[i + 1];
      match = (pattern[static_cast<std::size_t>(i)] == '<') == up;
    }
    hits += match;
    ++total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Rational(static_cast<long long>(hits), static_cast<long long>(total));
}

}  // namespace altseq
