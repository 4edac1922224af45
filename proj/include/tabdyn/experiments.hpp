#pragma once

// Monte Carlo experiments. Every experiment is a pure function of its
// parameters and seed; trial t draws from Rng(seed, trial_stream(salt, t)).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tabdyn {

struct ExperimentReport {
  std::string name;
  std::int64_t n = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::string statistic_name;
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
  double runtime_seconds = 0.0;
  /// Secondary numbers (trend values, moments, per-k errors).
  std::vector<std::pair<std::string, double>> extras;
  /// Per-trial rows for export.
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  [[nodiscard]] double extra(const std::string& key) const;
};

struct TrialPlan {
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// Angle of q_n against F_Θ; rows (angle, u/√n).
ExperimentReport experiment_theta(std::int64_t n, const TrialPlan& plan);
/// X(n)/√n against F_SC.
ExperimentReport experiment_second_class(std::int64_t n, const TrialPlan& plan);
/// Two-sample KS between u(q_n) and u(d_n) from independent traces.
ExperimentReport experiment_qn_equals_dn(std::int64_t n, const TrialPlan& plan);
/// n^{-1/2}(u, v) of the box created by inserting z; mean |u/√n − F_SC⁻¹(z)|.
ExperimentReport experiment_det_rsk(double z, std::int64_t n, const TrialPlan& plan);
/// Natural parametrization of RSK(z, X_1, …, X_n); target u = −F_SC⁻¹(z).
ExperimentReport experiment_det_jdt(double z, std::int64_t n, const TrialPlan& plan);
/// Recovers X_1..X_depth as F_Θ of the iterated angles; MAE and rank
/// correlation per k in the extras.
ExperimentReport experiment_inverse_rsk(std::int64_t n, int depth, const TrialPlan& plan);
/// Quantiles of sup|φ̃ − Ω*|; statistic is the 95th percentile.
ExperimentReport experiment_limit_shape(std::int64_t n, const TrialPlan& plan);
/// Means of M_1, M_2, M_4 and the pooled KS against the semicircle.
ExperimentReport experiment_pieri(std::int64_t n, int k, const TrialPlan& plan);
/// Hausdorff distance to the Rost region at time t; statistic is the
/// fraction of runs within tolerance.
ExperimentReport experiment_rost(double t, const TrialPlan& plan);
/// Competition interface angle after `steps` steps against the Φ law.
ExperimentReport experiment_phi(int steps, const TrialPlan& plan);
/// X(t)/t of the TASEP second-class particle against U(−1, 1).
ExperimentReport experiment_tasep(double t, const TrialPlan& plan);

}  // namespace tabdyn
