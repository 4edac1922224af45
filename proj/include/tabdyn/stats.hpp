#pragma once

// Empirical distributions, Kolmogorov-Smirnov statistics and the other
// summaries used by the Monte Carlo experiments.

#include <functional>
#include <span>
#include <vector>

#include "tabdyn/diagram.hpp"

namespace tabdyn {

/// Sorted finite sample with uniform weights.
class EmpiricalSample {
 public:
  EmpiricalSample() = default;
  /// Sorts the values; throws DomainError on non-finite entries.
  explicit EmpiricalSample(std::vector<double> values);

  [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
  /// Fraction of values ≤ x.
  [[nodiscard]] double cdf(double x) const noexcept;
  /// Type-7 quantile (linear interpolation); throws EmptySample.
  [[nodiscard]] double quantile(double p) const;
  [[nodiscard]] double median() const { return quantile(0.5); }
  [[nodiscard]] double mean() const;

 private:
  std::vector<double> values_;
};

/// sup_x |F_n(x) − F(x)| for a continuous or right-continuous F, evaluating
/// both one-sided limits at each sample point. Throws EmptySample.
double ks_distance(const EmpiricalSample& sample, const std::function<double(double)>& cdf);
/// sup_x |F_n(x) − G_m(x)|. Throws EmptySample.
double ks_two_sample(const EmpiricalSample& a, const EmpiricalSample& b);
/// Asymptotic Kolmogorov tail P(K > x).
double kolmogorov_tail(double x);

/// Upper tail of the chi-square law with `dof` degrees of freedom.
double chi_square_tail(double statistic, double dof);
struct ChiSquareResult {
  double statistic = 0.0;
  double dof = 0.0;
  double p_value = 1.0;
};
/// Homogeneity test on a two-row contingency table; empty columns dropped.
ChiSquareResult chi_square_two_sample(std::span<const long> a, std::span<const long> b);

/// Spearman rank correlation (average ranks for ties).
double spearman(std::span<const double> x, std::span<const double> y);
double mean(std::span<const double> x);

/// sup_u |φ̃_λ(u) − Ω*(u)| with the rescaling by √|λ|. The difference is
/// monotone between consecutive breakpoints (|Ω*′| ≤ 1), so the sup is
/// attained at a breakpoint or at u = ±2.
double profile_sup_distance(const YoungDiagram& lambda);

}  // namespace tabdyn
