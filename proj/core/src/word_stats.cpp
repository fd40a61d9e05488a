#include "altseq/word_stats.hpp"

#include <algorithm>
#include <cmath>

namespace altseq {

double gamma2_iid(const Distribution<double>& mu) {
  const int q = mu.q();
  for (int x = 1; x <= q; ++x)
    if (mu.p(x) >= 1.0) return 0.0;  // point mass: constant words, LAS == 1

  const double total_osc = osc(mu);
  double ratio_sq = 0.0;  // sum_x (L_x / (1 - p_x))^2 p_x
  for (int x = 1; x <= q; ++x) {
    const double r = mu.below(x) / (1.0 - mu.p(x));
    ratio_sq += r * r * mu.p(x);
  }

  double cross = 0.0;  // sum_{x,y} L_x L_y L_{min(x,y)} p_x p_y / ((1-p_x)(1-p_y))
  for (int x = 1; x <= q; ++x) {
    if (mu.p(x) == 0.0) continue;
    for (int y = 1; y <= q; ++y) {
      if (mu.p(y) == 0.0) continue;
      cross += mu.below(x) * mu.below(y) * mu.below(std::min(x, y)) * mu.p(x) * mu.p(y) /
               ((1.0 - mu.p(x)) * (1.0 - mu.p(y)));
    }
  }
  return total_osc * (2.0 - 3.0 * total_osc - 4.0 * ratio_sq) + 8.0 * cross;
}

double gamma2_uniform_closed(int q) {
  if (q < 1) throw std::invalid_argument("gamma2_uniform_closed needs q >= 1");
  const double qd = q;
  return (8.0 / 45.0) * (1.0 + 1.0 / qd) * (1.0 - 3.0 / (4.0 * qd)) * (1.0 - 1.0 / (2.0 * qd)) /
         (1.0 - 1.0 / (2.0 * qd));
}

double gamma2_series(const Distribution<double>& mu, double tail_bound) {
  const int q = mu.q();
  for (int x = 1; x <= q; ++x)
    if (mu.p(x) >= 1.0) return 0.0;

  const double total_osc = osc(mu);
  // f is 2 * an indicator, so Var(f) = 2 E[f] - E[f]^2 with E[f] = Osc.
  double gamma2 = 2.0 * total_osc - total_osc * total_osc;

  // B_k = sum_y L_y^2 p_y^k, tracked with running powers; tail_y(k) is the
  // geometric tail sum_{l >= k} B_l = sum_y L_y^2 p_y^k / (1 - p_y).
  std::vector<double> pw(static_cast<std::size_t>(q));
  for (int y = 1; y <= q; ++y) pw[static_cast<std::size_t>(y - 1)] = mu.p(y);

  const double kappa = mu.kappa();
  for (std::uint64_t k = 1;; ++k) {
    double cov = 0.0;
    if (k >= 2) {
      // Lag k sees the run of length k-1: the quadruple-sum term minus the
      // oscillation correction at l = k - 1.
      double a = 0.0, b = 0.0;
      for (int y = 1; y <= q; ++y) {
        const double ly_pyl = mu.below(y) * pw[static_cast<std::size_t>(y - 1)];
        b += mu.below(y) * ly_pyl;
        if (ly_pyl == 0.0) continue;
        for (int x = 1; x <= q; ++x) {
          if (mu.p(x) == 0.0) continue;
          a += (mu.below(x) / (1.0 - mu.p(x))) * ly_pyl * mu.below(std::min(x, y)) * mu.p(x);
        }
      }
      cov += 4.0 * a - 2.0 * total_osc * b;
      for (int y = 1; y <= q; ++y) pw[static_cast<std::size_t>(y - 1)] *= mu.p(y);
    }
    double tail = 0.0;  // runs of length >= k overlapping both windows
    for (int y = 1; y <= q; ++y)
      if (mu.p(y) < 1.0)
        tail += mu.below(y) * mu.below(y) * pw[static_cast<std::size_t>(y - 1)] / (1.0 - mu.p(y));
    cov -= 2.0 * total_osc * tail;

    gamma2 += 2.0 * cov;

    const double mixing = 2.0 * q * std::pow(kappa, static_cast<double>(k));
    if (mixing < tail_bound || k > 200000) break;
  }
  return gamma2;
}

}  // namespace altseq
