#pragma once

#include <span>
#include <vector>

namespace polevo::stats {

struct WelchResult {
  double t = 0.0;
  double dof = 0.0;
  double p = 1.0;
};

/// Welch's unequal-variance t-test (a minus b convention), two-sided p via
/// the regularized incomplete beta. Requires both samples of size >= 2 with
/// nonzero variance in at least one; throws DegenerateSample otherwise.
WelchResult welch_t_test(std::span<const double> a, std::span<const double> b);

struct KruskalResult {
  double h = 0.0;
  double p = 1.0;
};

/// Kruskal-Wallis rank test with tie correction; p from the chi-square
/// survival function with k-1 degrees of freedom. Throws DegenerateSample
/// when every observation is identical or a group is empty.
KruskalResult kruskal_wallis(const std::vector<std::vector<double>>& groups);

struct SpearmanResult {
  double rho = 0.0;
  double p = 1.0;
};

/// Spearman rank correlation (average ranks for ties); p via the
/// t-approximation with n-2 degrees of freedom. Throws DegenerateSample on
/// constant input.
SpearmanResult spearman(std::span<const double> xs, std::span<const double> ys);

/// Each p multiplied by m and capped at 1. Requires m >= p_values.size().
std::vector<double> bonferroni(std::span<const double> p_values, int m);

double median(std::vector<double> values);

/// 1-based ranks with ties replaced by their average rank.
std::vector<double> average_ranks(std::span<const double> values);

// Special functions behind the p-values, exposed for direct validation.
double regularized_incomplete_beta(double a, double b, double x);
double regularized_gamma_q(double a, double x);
double students_t_two_sided_p(double t, double dof);
double chi_squared_sf(double x, double dof);

}  // namespace polevo::stats
