#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "altseq/sequence.hpp"

namespace altseq {

/// Finite ergodic Markov chain on the ordered state space [q].
/// Construction validates stochasticity (rows sum to 1 within 1e-12,
/// entries >= 0), computes the stationary vector (residual <= 1e-10) and
/// the ergodicity flags. Reducible inputs are rejected.
struct MarkovModel {
  int q = 0;
  std::vector<double> P;   // row-major q*q
  std::vector<double> pi;  // stationary row vector
  bool irreducible = false;
  bool aperiodic = false;

  double at(int from, int to) const {  // 1-based states
    return P[static_cast<std::size_t>(from - 1) * static_cast<std::size_t>(q) +
             static_cast<std::size_t>(to - 1)];
  }
  double stationary_at(int state) const { return pi[static_cast<std::size_t>(state - 1)]; }
};

MarkovModel make_markov(const std::vector<std::vector<double>>& rows);

/// Stationary distribution of a row-stochastic irreducible matrix: direct
/// linear solve with the normalization row, power-iteration fallback.
/// Throws "no unique stationary distribution" when the support graph is not
/// strongly connected.
std::vector<double> stationary(int q, std::span<const double> P);

/// The chain extended with the gradient sign y in {+1, -1}: moving up lands
/// in (s, +1), moving down in (s, -1), a plateau keeps the sign. States are
/// indexed (r, +1) -> 2(r-1), (r, -1) -> 2(r-1)+1.
struct AugmentedPair {
  int q = 0;
  std::vector<double> P;           // 2q x 2q
  std::vector<double> claimed_pi;  // closed-form stationary candidate
};

AugmentedPair augment_pair(const MarkovModel& model);

/// The (x, y_prev, y) chain. States indexed
/// 4(r-1) + {0: (+,+), 1: (+,-), 2: (-,+), 3: (-,-)}.
struct AugmentedTriple {
  int q = 0;
  std::vector<double> P;           // 4q x 4q
  std::vector<double> claimed_pi;  // closed-form stationary candidate
};

AugmentedTriple augment_triple(const MarkovModel& model);

struct MarkovOsc {
  double plus = 0;   // stationary mass of down-turns t < s > r
  double minus = 0;  // stationary mass of up-turns  t > s < r
  double total() const { return plus + minus; }
};

MarkovOsc osc_markov_parts(const MarkovModel& model);

/// Osc(x) = Osc+ + Osc-, the a.s. limit of LAS/n for the chain. The two
/// halves must agree (up-turns and down-turns alternate); a gap beyond
/// 1e-12 throws.
double osc_markov(const MarkovModel& model);

/// Gradient sign process: y_0 = +1; y_k copies the comparison sign of the
/// step into position k, plateaus inherit the previous sign.
template <class T>
std::vector<std::int8_t> y_process(std::span<const T> a) {
  std::vector<std::int8_t> y(a.size());
  if (a.empty()) return y;
  y[0] = 1;
  for (std::size_t k = 1; k < a.size(); ++k)
    y[k] = a[k] > a[k - 1] ? 1 : (a[k] < a[k - 1] ? -1 : y[k - 1]);
  return y;
}

/// LAS via the sign-change count of the y process, plus one. Must agree
/// with las_alphabet on every input (checked exhaustively in the tests).
template <class T>
std::int64_t las_via_y(std::span<const T> a) {
  if (a.empty()) return 0;
  std::int64_t changes = 0;
  std::int8_t y = 1;
  for (std::size_t k = 1; k < a.size(); ++k) {
    const std::int8_t ny = a[k] > a[k - 1] ? 1 : (a[k] < a[k - 1] ? -1 : y);
    changes += (ny != y);
    y = ny;
  }
  return changes + 1;
}

template <class C>
auto y_process(const C& c) { return y_process(std::span<const typename C::value_type>(c)); }
template <class C>
auto las_via_y(const C& c) { return las_via_y(std::span<const typename C::value_type>(c)); }

}  // namespace altseq
