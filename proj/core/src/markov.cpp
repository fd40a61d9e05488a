#include "altseq/markov.hpp"

#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace altseq {

namespace {

constexpr double kRowSumTol = 1e-12;
constexpr double kStationaryTol = 1e-10;

std::vector<std::vector<int>> support_adjacency(int q, std::span<const double> P,
                                                bool transpose) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      if (P[static_cast<std::size_t>(i) * q + j] > 0.0)
        adj[static_cast<std::size_t>(transpose ? j : i)].push_back(transpose ? i : j);
  return adj;
}

bool reaches_all(const std::vector<std::vector<int>>& adj, int start) {
  std::vector<bool> seen(adj.size(), false);
  std::queue<int> frontier;
  frontier.push(start);
  seen[static_cast<std::size_t>(start)] = true;
  std::size_t count = 1;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v : adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++count;
        frontier.push(v);
      }
  }
  return count == adj.size();
}

bool strongly_connected(int q, std::span<const double> P) {
  return reaches_all(support_adjacency(q, P, false), 0) &&
         reaches_all(support_adjacency(q, P, true), 0);
}

// Period of an irreducible chain: gcd over all support edges (u, v) of
// depth(u) + 1 - depth(v) on a BFS tree. Aperiodic iff the gcd is 1.
bool is_aperiodic(int q, std::span<const double> P) {
  auto adj = support_adjacency(q, P, false);
  std::vector<int> depth(static_cast<std::size_t>(q), -1);
  std::queue<int> frontier;
  frontier.push(0);
  depth[0] = 0;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v : adj[static_cast<std::size_t>(u)])
      if (depth[static_cast<std::size_t>(v)] < 0) {
        depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
        frontier.push(v);
      }
  }
  std::int64_t g = 0;
  for (int u = 0; u < q; ++u)
    for (int v : adj[static_cast<std::size_t>(u)])
      g = std::gcd(g, static_cast<std::int64_t>(depth[static_cast<std::size_t>(u)] + 1 -
                                                depth[static_cast<std::size_t>(v)]));
  return g == 1;
}

double stationary_residual(int q, std::span<const double> P, std::span<const double> x) {
  double worst = 0.0;
  for (int j = 0; j < q; ++j) {
    double acc = 0.0;
    for (int i = 0; i < q; ++i) acc += x[static_cast<std::size_t>(i)] * P[static_cast<std::size_t>(i) * q + j];
    worst = std::max(worst, std::abs(acc - x[static_cast<std::size_t>(j)]));
  }
  return worst;
}

// Solves x (P - I) = 0 with sum(x) = 1: transpose system, last equation
// replaced by the normalization row. Returns empty on a singular pivot.
std::vector<double> solve_direct(int q, std::span<const double> P) {
  const std::size_t n = static_cast<std::size_t>(q);
  std::vector<double> a(n * (n + 1), 0.0);  // augmented [A | b]
  for (std::size_t r = 0; r + 1 < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      a[r * (n + 1) + c] = P[c * n + r] - (r == c ? 1.0 : 0.0);
    a[r * (n + 1) + n] = 0.0;
  }
  for (std::size_t c = 0; c < n; ++c) a[(n - 1) * (n + 1) + c] = 1.0;
  a[(n - 1) * (n + 1) + n] = 1.0;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * (n + 1) + col]) > std::abs(a[pivot * (n + 1) + col])) pivot = r;
    if (std::abs(a[pivot * (n + 1) + col]) < 1e-13) return {};
    if (pivot != col)
      for (std::size_t c = col; c <= n; ++c) std::swap(a[pivot * (n + 1) + c], a[col * (n + 1) + c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r * (n + 1) + col] / a[col * (n + 1) + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c <= n; ++c) a[r * (n + 1) + c] -= f * a[col * (n + 1) + c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = a[r * (n + 1) + n] / a[r * (n + 1) + r];
  return x;
}

std::vector<double> solve_power_iteration(int q, std::span<const double> P) {
  const std::size_t n = static_cast<std::size_t>(q);
  std::vector<double> x(n, 1.0 / q), next(n);
  for (int iter = 0; iter < 1000000; ++iter) {
    double delta = 0.0, total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) acc += x[i] * P[i * n + j];
      next[j] = acc;
      total += acc;
    }
    for (std::size_t j = 0; j < n; ++j) {
      next[j] /= total;
      delta = std::max(delta, std::abs(next[j] - x[j]));
    }
    x.swap(next);
    if (delta < 1e-13) break;
  }
  return x;
}

void require_ergodic(const MarkovModel& model) {
  if (!model.irreducible || !model.aperiodic)
    throw std::invalid_argument("chain must be ergodic (irreducible and aperiodic)");
  for (int r = 1; r <= model.q; ++r)
    if (model.at(r, r) >= 1.0)
      throw std::invalid_argument("chain not ergodic on gradient states (absorbing plateau)");
}

}  // namespace

std::vector<double> stationary(int q, std::span<const double> P) {
  if (q < 1 || P.size() != static_cast<std::size_t>(q) * static_cast<std::size_t>(q))
    throw std::invalid_argument("stationary: bad matrix shape");
  if (!strongly_connected(q, P))
    throw std::invalid_argument("no unique stationary distribution (reducible chain)");
  std::vector<double> x = solve_direct(q, P);
  if (x.empty() || stationary_residual(q, P, x) > kStationaryTol) x = solve_power_iteration(q, P);
  if (stationary_residual(q, P, x) > kStationaryTol)
    throw std::runtime_error("stationary solve failed to reach residual 1e-10");
  // Tiny negative entries can slip out of the solve; clip and renormalize.
  double total = 0.0;
  for (double& v : x) {
    if (v < 0.0) v = 0.0;
    total += v;
  }
  for (double& v : x) v /= total;
  return x;
}

MarkovModel make_markov(const std::vector<std::vector<double>>& rows) {
  const int q = static_cast<int>(rows.size());
  if (q < 1) throw std::invalid_argument("markov model needs q >= 1");
  MarkovModel model;
  model.q = q;
  model.P.resize(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != q)
      throw std::invalid_argument("transition matrix must be square");
    double sum = 0.0;
    for (int j = 0; j < q; ++j) {
      const double v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v < 0.0) throw std::invalid_argument("negative transition probability");
      model.P[static_cast<std::size_t>(i) * q + j] = v;
      sum += v;
    }
    if (std::abs(sum - 1.0) > kRowSumTol)
      throw std::invalid_argument("row " + std::to_string(i + 1) + " sums to " +
                                  std::to_string(sum) + ", expected 1");
  }
  model.irreducible = strongly_connected(q, model.P);
  model.aperiodic = model.irreducible && is_aperiodic(q, model.P);
  model.pi = stationary(q, model.P);
  return model;
}

AugmentedPair augment_pair(const MarkovModel& model) {
  require_ergodic(model);
  const int q = model.q;
  const std::size_t m = static_cast<std::size_t>(q) * 2;
  const auto idx = [](int r, int y) {
    return static_cast<std::size_t>((r - 1) * 2 + (y < 0 ? 1 : 0));
  };

  AugmentedPair aug;
  aug.q = q;
  aug.P.assign(m * m, 0.0);
  for (int r = 1; r <= q; ++r) {
    for (int y : {+1, -1}) {
      const std::size_t from = idx(r, y);
      for (int s = 1; s <= q; ++s) {
        const double p = model.at(r, s);
        if (p == 0.0) continue;
        if (s > r)
          aug.P[from * m + idx(s, +1)] += p;
        else if (s < r)
          aug.P[from * m + idx(s, -1)] += p;
        else
          aug.P[from * m + idx(r, y)] += p;  // plateau keeps the sign
      }
    }
  }

  aug.claimed_pi.assign(m, 0.0);
  for (int r = 1; r <= q; ++r) {
    double up = 0.0, down = 0.0;
    for (int s = 1; s <= q; ++s) {
      if (s < r) up += model.stationary_at(s) * model.at(s, r);
      if (s > r) down += model.stationary_at(s) * model.at(s, r);
    }
    const double escape = 1.0 - model.at(r, r);
    aug.claimed_pi[idx(r, +1)] = up / escape;
    aug.claimed_pi[idx(r, -1)] = down / escape;
  }
  return aug;
}

AugmentedTriple augment_triple(const MarkovModel& model) {
  require_ergodic(model);
  const int q = model.q;
  const std::size_t m = static_cast<std::size_t>(q) * 4;
  const auto idx = [](int r, int yprev, int y) {
    return static_cast<std::size_t>((r - 1) * 4 + (yprev < 0 ? 2 : 0) + (y < 0 ? 1 : 0));
  };

  AugmentedTriple aug;
  aug.q = q;
  aug.P.assign(m * m, 0.0);
  for (int r = 1; r <= q; ++r)
    for (int yprev : {+1, -1})
      for (int y : {+1, -1}) {
        const std::size_t from = idx(r, yprev, y);
        for (int s = 1; s <= q; ++s) {
          const double p = model.at(r, s);
          if (p == 0.0) continue;
          const int ny = s > r ? +1 : (s < r ? -1 : y);
          aug.P[from * m + idx(s, y, ny)] += p;
        }
      }

  // The four displayed stationary formulas; sum over (t, s) pairs with the
  // plateau escape factor 1/(1 - p_ss).
  aug.claimed_pi.assign(m, 0.0);
  for (int r = 1; r <= q; ++r) {
    double pp = 0, pm = 0, mp = 0, mm = 0;
    for (int s = 1; s <= q; ++s) {
      const double escape = 1.0 - model.at(s, s);
      double from_below = 0, from_above = 0;  // sum_t pi_t p_{t,s} over t<s / t>s
      for (int t = 1; t <= q; ++t) {
        if (t < s) from_below += model.stationary_at(t) * model.at(t, s);
        if (t > s) from_above += model.stationary_at(t) * model.at(t, s);
      }
      const double step = model.at(s, r) / escape;
      if (s <= r) pp += from_below * step;  // t < s <= r
      if (s > r) pm += from_below * step;   // t < s > r
      if (s < r) mp += from_above * step;   // t > s < r
      if (s >= r) mm += from_above * step;  // t > s >= r
    }
    aug.claimed_pi[idx(r, +1, +1)] = pp;
    aug.claimed_pi[idx(r, +1, -1)] = pm;
    aug.claimed_pi[idx(r, -1, +1)] = mp;
    aug.claimed_pi[idx(r, -1, -1)] = mm;
  }
  return aug;
}

MarkovOsc osc_markov_parts(const MarkovModel& model) {
  require_ergodic(model);
  const int q = model.q;
  MarkovOsc out;
  for (int s = 1; s <= q; ++s) {
    const double escape = 1.0 - model.at(s, s);
    double from_below = 0, from_above = 0;
    for (int t = 1; t <= q; ++t) {
      if (t < s) from_below += model.stationary_at(t) * model.at(t, s);
      if (t > s) from_above += model.stationary_at(t) * model.at(t, s);
    }
    double to_below = 0, to_above = 0;
    for (int r = 1; r <= q; ++r) {
      if (r < s) to_below += model.at(s, r);
      if (r > s) to_above += model.at(s, r);
    }
    out.plus += from_below * to_below / escape;   // t < s > r
    out.minus += from_above * to_above / escape;  // t > s < r
  }
  return out;
}

double osc_markov(const MarkovModel& model) {
  const MarkovOsc parts = osc_markov_parts(model);
  if (std::abs(parts.plus - parts.minus) > 1e-12)
    throw std::logic_error("Osc+ and Osc- disagree beyond 1e-12");
  return parts.total();
}

}  // namespace altseq
