#include "altseq/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace altseq {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double ks_normal(std::span<const double> sample) {
  if (sample.size() < 100)
    throw std::invalid_argument("ks_normal needs a sample of at least 100 points");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double m = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double cdf = normal_cdf(sorted[i]);
    d = std::max(d, cdf - static_cast<double>(i) / m);
    d = std::max(d, static_cast<double>(i + 1) / m - cdf);
  }
  return d;
}

namespace {

// Regularized incomplete gamma P(a, x) / Q(a, x): series for x < a+1,
// continued fraction otherwise. Double precision, eps 1e-14.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-14) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_contfrac(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-14) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::domain_error("gamma_q domain");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_contfrac(a, x);
}

}  // namespace

double chi_square_sf(double x, double dof) { return gamma_q(dof / 2.0, x / 2.0); }

double chi_square_gof_pvalue(std::span<const std::uint64_t> observed,
                             std::span<const double> expected_probs) {
  if (observed.size() != expected_probs.size() || observed.empty())
    throw std::invalid_argument("chi-square: mismatched inputs");
  double total = 0.0;
  for (auto c : observed) total += static_cast<double>(c);
  double stat = 0.0;
  int cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expect = total * expected_probs[i];
    if (expect <= 0.0) {
      if (observed[i] != 0)
        throw std::invalid_argument("chi-square: observation in zero-probability cell");
      continue;
    }
    const double diff = static_cast<double>(observed[i]) - expect;
    stat += diff * diff / expect;
    ++cells;
  }
  if (cells < 2) return 1.0;
  return chi_square_sf(stat, cells - 1);
}

double chi_square_two_sample_pvalue(std::span<const std::uint64_t> a,
                                    std::span<const std::uint64_t> b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("chi-square: mismatched inputs");
  double na = 0, nb = 0;
  for (auto c : a) na += static_cast<double>(c);
  for (auto c : b) nb += static_cast<double>(c);
  const double ka = std::sqrt(nb / na), kb = std::sqrt(na / nb);
  double stat = 0.0;
  int cells = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double oa = static_cast<double>(a[i]), ob = static_cast<double>(b[i]);
    if (oa + ob == 0.0) continue;
    const double diff = ka * oa - kb * ob;
    stat += diff * diff / (oa + ob);
    ++cells;
  }
  if (cells < 2) return 1.0;
  return chi_square_sf(stat, cells - 1);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_line needs >= 2 matched points");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate x grid");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  if (x.size() > 2) fit.slope_stderr = std::sqrt(ss_res / (n - 2.0) / sxx);
  return fit;
}

}  // namespace altseq
