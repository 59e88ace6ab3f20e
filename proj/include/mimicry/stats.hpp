#pragma once

#include <span>
#include <vector>

namespace mimicry::stats {

/// P(X >= k) for X ~ Binomial(n, p).
double binomial_upper_tail(int n, int k, double p);

/// Two-sided exact p for k successes in n fair trials: twice the smaller
/// tail, capped at 1.
double binomial_two_sided_p(int n, int k);

/// P(Z > z) for a standard normal.
double normal_sf(double z);

/// Upper tail of a chi-square with one degree of freedom.
double chi2_1df_sf(double statistic);

/// Two-sided p for a t statistic with `df` degrees of freedom.
double student_t_two_sided_p(double t, double df);

/// Linear-interpolation quantile of already sorted data, q in [0, 1].
double quantile_sorted(std::span<const double> sorted, double q);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double se_slope = 0.0;
  double t = 0.0;
  double p = 1.0;  // two-sided, n - 2 df
  std::size_t n = 0;
};

/// Ordinary least squares of y on x. Needs at least three points and
/// non-constant x; throws DomainError otherwise.
LinearFit fit_linear_trend(std::span<const double> x, std::span<const double> y);

struct TTest {
  double t = 0.0;
  double p = 1.0;
  double df = 0.0;
};

/// Welch's unequal-variance two-sample t-test, two-sided.
TTest welch_t_test(std::span<const double> a, std::span<const double> b);

}  // namespace mimicry::stats
