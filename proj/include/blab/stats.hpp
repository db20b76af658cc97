#pragma once

#include <cstdint>
#include <vector>

namespace blab::stats {

double mean(const std::vector<double>& xs);

/// Unbiased sample variance (n-1 denominator).
double sample_variance(const std::vector<double>& xs);

/// Standard error of the mean.
double standard_error(const std::vector<double>& xs);

/// Median with the usual midpoint rule for even counts.
double median(std::vector<double> xs);

/// Linear-interpolation quantile (the numpy default), q in [0, 1].
double quantile(std::vector<double> xs, double q);

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Regularized upper incomplete gamma Q(a, x); series + continued fraction.
double gamma_q(double a, double x);

/// Survival function of the chi-square distribution with df degrees of
/// freedom, i.e. P(X >= x).
double chi_square_sf(double x, int df);

/// Pearson chi-square statistic for observed counts against expected
/// probabilities (which are normalized internally).
double chi_square_statistic(const std::vector<int64_t>& observed,
                            const std::vector<double>& expected_weights);

/// Asymptotic two-sample Kolmogorov-Smirnov critical value at level alpha
/// for sample sizes n and m: c(alpha) * sqrt((n + m) / (n * m)).
double ks_two_sample_critical(double alpha, int64_t n, int64_t m);

}  // namespace blab::stats
