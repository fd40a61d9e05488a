#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "altseq/rational.hpp"

namespace altseq {

namespace detail {

template <class S>
S scalar_pow(S base, std::uint64_t e) {
  S result(1);
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.to_double(); }

}  // namespace detail

/// Probability distribution mu on the alphabet [q] = {1, .., q}, with the
/// derived per-symbol quantities used throughout:
///   below(x) = sum of p_y over y < x,   above(x) = sum over y > x,
///   kappa    = max_x p_x.
/// S is double or Rational; the rational mode keeps every later computation
/// exact. below(x) + above(x) + p(x) == 1 for each symbol.
template <class S>
class Distribution {
 public:
  explicit Distribution(std::vector<S> probs) : p_(std::move(probs)) {
    if (p_.empty()) throw std::invalid_argument("distribution needs q >= 1");
    S total(0);
    for (const S& v : p_) {
      if (v < S(0)) throw std::invalid_argument("negative probability");
      total = total + v;
    }
    if constexpr (std::is_same_v<S, Rational>) {
      if (total != S(1)) throw std::invalid_argument("probabilities must sum to 1 exactly");
    } else {
      if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("probabilities must sum to 1 within 1e-12");
    }
    below_.resize(p_.size());
    above_.resize(p_.size());
    S acc(0);
    for (std::size_t i = 0; i < p_.size(); ++i) {
      below_[i] = acc;
      acc = acc + p_[i];
    }
    S acc2(0);
    for (std::size_t i = p_.size(); i-- > 0;) {
      above_[i] = acc2;
      acc2 = acc2 + p_[i];
    }
    kappa_ = p_[0];
    for (const S& v : p_)
      if (kappa_ < v) kappa_ = v;
  }

  static Distribution uniform(int q) {
    if (q < 1) throw std::invalid_argument("uniform distribution needs q >= 1");
    if constexpr (std::is_same_v<S, Rational>)
      return Distribution(std::vector<S>(q, Rational(1, q)));
    else
      return Distribution(std::vector<S>(q, 1.0 / q));
  }

  int q() const { return static_cast<int>(p_.size()); }

  /// Probability of symbol x (1-based).
  const S& p(int x) const { return p_.at(check(x) - 1); }
  /// Mass strictly below / strictly above symbol x.
  const S& below(int x) const { return below_.at(check(x) - 1); }
  const S& above(int x) const { return above_.at(check(x) - 1); }
  const S& kappa() const { return kappa_; }
  const std::vector<S>& probs() const { return p_; }

 private:
  int check(int x) const {
    if (x < 1 || x > q()) throw std::out_of_range("symbol out of range 1..q");
    return x;
  }

  std::vector<S> p_, below_, above_;
  S kappa_{0};
};

/// Oscillation of mu at x: (below^2 + above^2) / (below + above), with the
/// degenerate convention osc = 0 when below + above = 0 (p_x = 1).
template <class S>
S osc_at(const Distribution<S>& mu, int x) {
  const S l = mu.below(x);
  const S u = mu.above(x);
  const S denom = l + u;
  if (!(denom > S(0))) return S(0);
  return (l * l + u * u) / denom;
}

/// Total oscillation Osc(mu) = sum_x osc_at(mu, x) p_x. This is the a.s.
/// limit of LAS/n for iid words drawn from mu; uniform on [q] gives
/// 2/3 - 1/(3q).
template <class S>
S osc(const Distribution<S>& mu) {
  S total(0);
  for (int x = 1; x <= mu.q(); ++x) total = total + osc_at(mu, x) * mu.p(x);
  return total;
}

/// Sandwich bounds: (1 - sum p^2)/2 <= Osc(mu) <= 2(1 - sum p^3)/3.
template <class S>
std::pair<S, S> osc_bounds(const Distribution<S>& mu) {
  S sum2(0), sum3(0);
  for (int x = 1; x <= mu.q(); ++x) {
    const S& p = mu.p(x);
    sum2 = sum2 + p * p;
    sum3 = sum3 + p * p * p;
  }
  if constexpr (std::is_same_v<S, Rational>)
    return {(Rational(1) - sum2) / Rational(2), (Rational(1) - sum3) * Rational(2, 3)};
  else
    return {(1.0 - sum2) / 2.0, (1.0 - sum3) * (2.0 / 3.0)};
}

/// Exact mean of LAS for n iid letters from mu:
///   n*Osc(mu) + sum_x R1(x) p_x + sum_x R2(x) p_x^n
/// with R1 = L/(L+U) + 2LU/(L+U)^2 - osc(x), R2 = U/(L+U) - 2LU/(L+U)^2.
/// Symbols with L+U = 0 contribute nothing to R1/R2 (degenerate convention,
/// valid for non-degenerate mu; a point mass yields 0, not 1).
template <class S>
S exact_mean_iid(const Distribution<S>& mu, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("exact_mean_iid needs n >= 1");
  S r1_term(0), r2_term(0);
  for (int x = 1; x <= mu.q(); ++x) {
    const S l = mu.below(x);
    const S u = mu.above(x);
    const S denom = l + u;
    if (!(denom > S(0))) continue;
    const S cross = (S(2) * l * u) / (denom * denom);
    const S r1 = l / denom + cross - osc_at(mu, x);
    const S r2 = u / denom - cross;
    r1_term = r1_term + r1 * mu.p(x);
    r2_term = r2_term + r2 * detail::scalar_pow(mu.p(x), n);
  }
  return S(static_cast<long long>(n)) * osc(mu) + r1_term + r2_term;
}

/// Uniform-mixing rate bound phi(n) <= 2 q kappa^(n-1), clamped to 1.
template <class S>
double mixing_bound(const Distribution<S>& mu, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mixing_bound needs n >= 1");
  const double kappa = detail::to_double(mu.kappa());
  const double bound = 2.0 * mu.q() * std::pow(kappa, static_cast<double>(n - 1));
  return std::min(1.0, bound);
}

/// Drops the exact probabilities to doubles.
inline Distribution<double> to_double_dist(const Distribution<Rational>& mu) {
  std::vector<double> p;
  p.reserve(mu.probs().size());
  for (const Rational& r : mu.probs()) p.push_back(r.to_double());
  // Exact rational input can land a hair off 1.0 in binary; renormalize.
  double s = 0;
  for (double v : p) s += v;
  for (double& v : p) v /= s;
  return Distribution<double>(std::move(p));
}

}  // namespace altseq
