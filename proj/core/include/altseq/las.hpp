#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

// Longest alternating subsequence (LAS): the longest subsequence whose
// comparisons strictly alternate starting with a descent,
//   a_{l1} > a_{l2} < a_{l3} > ...
// For tie-free input LAS equals the number of local maxima plus local
// minima; with ties the extremum definitions become plateau-aware (an
// extremum sits at the end of a maximal run of equal values). Everything
// here is a pure function of its argument.

namespace altseq {

namespace detail {

// Counting pass shared by the tie-free and plateau-aware paths. Tracks the
// direction of the last strict comparison; a run end going down is a maximum
// if the run was entered from below (or the prefix is constant), a run end
// going up is a minimum only if the run was entered from above. The final
// index counts as the extremum matching the live direction.
template <class T, class MaxFn, class MinFn>
void scan_extrema(std::span<const T> a, MaxFn&& on_max, MinFn&& on_min) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("empty sequence");
  int dir = 0;  // -1 descending run, +1 ascending, 0 all equal so far
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k] < a[k + 1]) {
      if (dir < 0) on_min(k);
      dir = +1;
    } else if (a[k] > a[k + 1]) {
      if (dir >= 0) on_max(k);
      dir = -1;
    }
  }
  if (dir < 0)
    on_min(n - 1);
  else
    on_max(n - 1);
}

template <class T>
bool has_adjacent_tie(std::span<const T> a) {
  for (std::size_t k = 0; k + 1 < a.size(); ++k)
    if (a[k] == a[k + 1]) return true;
  return false;
}

}  // namespace detail

/// LAS of a sequence over a finite ordered alphabet (ties allowed):
/// plateau-aware local maxima + minima, one linear pass.
template <class T>
std::int64_t las_alphabet(std::span<const T> a) {
  std::int64_t count = 0;
  detail::scan_extrema(a, [&](std::size_t) { ++count; }, [&](std::size_t) { ++count; });
  return count;
}

/// LAS of a sequence with pairwise-distinct values, via the boundary +
/// interior-peak count
///   1(a_n > a_{n-1}) + 2*1(a_1 > a_2) + 2*sum_{k=2}^{n-1} 1(a_{k-1} < a_k > a_{k+1}).
/// Skips the duplicate check; callers guarantee distinctness (samplers,
/// enumeration over permutations).
template <class T>
std::int64_t las_distinct_unchecked(std::span<const T> a) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("empty sequence");
  if (n == 1) return 1;
  std::int64_t count = (a[n - 1] > a[n - 2] ? 1 : 0) + (a[0] > a[1] ? 2 : 0);
  for (std::size_t k = 1; k + 1 < n; ++k)
    if (a[k - 1] < a[k] && a[k] > a[k + 1]) count += 2;
  return count;
}

/// Checked variant of las_distinct_unchecked: rejects any repeated value.
template <class T>
std::int64_t las_distinct(std::span<const T> a) {
  std::vector<T> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("ties not allowed in distinct-value path");
  return las_distinct_unchecked(a);
}

/// Independent quadratic oracle: dynamic program over (ending index, parity
/// of the subsequence position). Odd positions must be followed by a
/// strictly smaller element, even positions by a strictly larger one.
/// Handles ties and distinct values identically.
template <class T>
std::int64_t las_bruteforce(std::span<const T> a) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("empty sequence");
  std::vector<std::int32_t> best_odd(n, 1);   // subsequence ends at i in odd position
  std::vector<std::int32_t> best_even(n, 0);  // ... in even position (0 = impossible)
  std::int32_t best = 1;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (a[j] > a[i] && best_odd[j] + 1 > best_even[i]) best_even[i] = best_odd[j] + 1;
      if (a[j] < a[i] && best_even[j] > 0 && best_even[j] + 1 > best_odd[i])
        best_odd[i] = best_even[j] + 1;
    }
    best = std::max({best, best_odd[i], best_even[i]});
  }
  return best;
}

struct Extrema {
  std::vector<std::size_t> maxima;  // 1-based indices, increasing
  std::vector<std::size_t> minima;
};

/// Positions of local maxima and minima. The plateau-aware rules reduce to
/// the tie-free ones when no two adjacent values are equal, so a single scan
/// serves both cases. Maxima and minima interleave starting with a maximum.
template <class T>
Extrema local_extrema(std::span<const T> a) {
  Extrema e;
  detail::scan_extrema(
      a, [&](std::size_t k) { e.maxima.push_back(k + 1); },
      [&](std::size_t k) { e.minima.push_back(k + 1); });
  return e;
}

// Container conveniences.
template <class C>
auto las_alphabet(const C& c) { return las_alphabet(std::span<const typename C::value_type>(c)); }
template <class C>
auto las_distinct(const C& c) { return las_distinct(std::span<const typename C::value_type>(c)); }
template <class C>
auto las_distinct_unchecked(const C& c) {
  return las_distinct_unchecked(std::span<const typename C::value_type>(c));
}
template <class C>
auto las_bruteforce(const C& c) {
  return las_bruteforce(std::span<const typename C::value_type>(c));
}
template <class C>
auto local_extrema(const C& c) {
  return local_extrema(std::span<const typename C::value_type>(c));
}

}  // namespace altseq
