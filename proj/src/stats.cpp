#include "blab/stats.hpp"

#include <algorithm>
#include <cmath>

#include "blab/error.hpp"

namespace blab::stats {

double mean(const std::vector<double>& xs) {
  if (xs.empty()) fail(Errc::InsufficientData, "mean of empty sample");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sample_variance(const std::vector<double>& xs) {
  if (xs.size() < 2) fail(Errc::InsufficientData, "variance needs >= 2 samples");
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / static_cast<double>(xs.size() - 1);
}

double standard_error(const std::vector<double>& xs) {
  return std::sqrt(sample_variance(xs) / static_cast<double>(xs.size()));
}

double median(std::vector<double> xs) {
  if (xs.empty()) fail(Errc::InsufficientData, "median of empty sample");
  std::sort(xs.begin(), xs.end());
  const size_t n = xs.size();
  if (n % 2 == 1) return xs[n / 2];
  return 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

double quantile(std::vector<double> xs, double q) {
  if (xs.empty()) fail(Errc::InsufficientData, "quantile of empty sample");
  if (q < 0.0 || q > 1.0) fail(Errc::InvalidArgument, "quantile level outside [0,1]");
  std::sort(xs.begin(), xs.end());
  const double pos = q * static_cast<double>(xs.size() - 1);
  const auto lo = static_cast<size_t>(std::floor(pos));
  const auto hi = static_cast<size_t>(std::ceil(pos));
  const double frac = pos - static_cast<double>(lo);
  return xs[lo] + frac * (xs[hi] - xs[lo]);
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    fail(Errc::InsufficientData, "least squares needs >= 2 matched points");
  const double mx = mean(x);
  const double my = mean(y);
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) fail(Errc::DegenerateWindow, "degenerate abscissa in least squares");
  return sxy / sxx;
}

namespace {

// Regularized lower incomplete gamma P(a, x) via its power series.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int i = 0; i < 1000; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a, x) via Lentz's continued fraction.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0) fail(Errc::InvalidArgument, "gamma_q domain error");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_sf(double x, int df) {
  if (df < 1) fail(Errc::InvalidArgument, "chi_square_sf needs df >= 1");
  if (x <= 0.0) return 1.0;
  return gamma_q(0.5 * df, 0.5 * x);
}

double chi_square_statistic(const std::vector<int64_t>& observed,
                            const std::vector<double>& expected_weights) {
  if (observed.size() != expected_weights.size() || observed.empty())
    fail(Errc::InvalidArgument, "chi_square_statistic size mismatch");
  double total_weight = 0.0;
  int64_t total_count = 0;
  for (size_t i = 0; i < observed.size(); ++i) {
    if (expected_weights[i] <= 0.0)
      fail(Errc::InvalidArgument, "expected weights must be positive");
    total_weight += expected_weights[i];
    total_count += observed[i];
  }
  double stat = 0.0;
  for (size_t i = 0; i < observed.size(); ++i) {
    const double expected = static_cast<double>(total_count) * expected_weights[i] / total_weight;
    const double diff = static_cast<double>(observed[i]) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

double ks_two_sample_critical(double alpha, int64_t n, int64_t m) {
  if (alpha <= 0.0 || alpha >= 1.0 || n < 1 || m < 1)
    fail(Errc::InvalidArgument, "ks_two_sample_critical domain error");
  const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
  return c * std::sqrt(static_cast<double>(n + m) / (static_cast<double>(n) * static_cast<double>(m)));
}

}  // namespace blab::stats
