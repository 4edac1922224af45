#include "tabdyn/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "tabdyn/constants.hpp"
#include "tabdyn/corner_growth.hpp"
#include "tabdyn/error.hpp"
#include "tabdyn/jdt.hpp"
#include "tabdyn/laws.hpp"
#include "tabdyn/plancherel.hpp"
#include "tabdyn/rsk.hpp"
#include "tabdyn/stats.hpp"
#include "tabdyn/trials.hpp"

namespace tabdyn {

using namespace constants;

double ExperimentReport::extra(const std::string& key) const {
  for (const auto& [k, v] : extras) {
    if (k == key) return v;
  }
  throw Error(Errc::UnknownKey, "report " + name + " has no value '" + key + "'");
}

namespace {

class Stopwatch {
 public:
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ExperimentReport make_report(std::string name, std::int64_t n, const TrialPlan& plan,
                             std::string statistic_name, double threshold) {
  ExperimentReport r;
  r.name = std::move(name);
  r.n = n;
  r.trials = plan.trials;
  r.seed = plan.seed;
  r.statistic_name = std::move(statistic_name);
  r.threshold = threshold;
  return r;
}

Rng trial_rng(const TrialPlan& plan, Salt salt, std::int64_t trial, std::uint64_t variant = 0) {
  return Rng(plan.seed, trial_stream(salt, static_cast<std::uint64_t>(trial) ^ (variant << 32)));
}

// Angle laws are supported on [0, π/2]; KS also evaluates just outside.
double theta_cdf_total(double s) {
  return s <= 0 ? 0.0 : s >= std::numbers::pi / 2 ? 1.0 : theta_cdf(s);
}
double phi_cdf_total(double s) {
  return s <= 0 ? 0.0 : s >= std::numbers::pi / 2 ? 1.0 : phi_cdf(s);
}

// Natural-parametrization endpoint after streaming n uniforms through RSK.
Box lazy_endpoint(Rng& rng, std::int64_t n) {
  StreamingRecorder rec;
  NaturalParamTracker q;
  for (std::int64_t k = 0; k < n; ++k) q.push(rec.push(rng.uniform()));
  return q.current();
}

}  // namespace

ExperimentReport experiment_theta(std::int64_t n, const TrialPlan& plan) {
  Stopwatch clock;
  auto r = make_report("theta", n, plan, "ks", kThetaKs.value);
  const auto boxes = run_trials(
      plan.trials,
      [&](std::int64_t t) {
        Rng rng = trial_rng(plan, kSaltTheta, t);
        return lazy_endpoint(rng, n);
      },
      plan.jobs);
  std::vector<double> angles;
  r.columns = {"angle", "u_scaled"};
  for (const Box b : boxes) {
    angles.push_back(box_angle(b));
    r.rows.push_back({angles.back(), content(b) / std::sqrt(static_cast<double>(n))});
  }
  const EmpiricalSample sample(angles);
  r.statistic = ks_distance(sample, theta_cdf_total);
  r.pass = r.statistic < r.threshold;
  r.extras = {{"median_angle", sample.median()}};
  r.runtime_seconds = clock.seconds();
  return r;
}

ExperimentReport experiment_second_class(std::int64_t n, const TrialPlan& plan) {
  Stopwatch clock;
  auto r = make_report("second_class", n, plan, "ks", kSecondClassKs.value);
  // X(n) is read from q_{n+1}
  const auto boxes = run_trials(
      plan.trials,
      [&](std::int64_t t) {
        Rng rng = trial_rng(plan, kSaltSecondClass, t);
        return lazy_endpoint(rng, n + 1);
      },
      plan.jobs);
  std::vector<double> scaled;
  r.columns = {"X", "X_scaled"};
  for (const Box b : boxes) {
    scaled.push_back(content(b) / std::sqrt(static_cast<double>(n)));
    r.rows.push_back({static_cast<double>(content(b)), scaled.back()});
  }
  const EmpiricalSample sample(scaled);
  r.statistic = ks_distance(sample, semicircle_cdf);
  r.pass = r.statistic < r.threshold;
  const double m = sample.mean();
  double var = 0;
  for (double x : scaled) var += (x - m) * (x - m);
  var /= std::max<std::size_t>(1, scaled.size() - 1);
  r.extras = {{"mean", m}, {"mean_stderr", std::sqrt(var / scaled.size())}};
  r.runtime_seconds = clock.seconds();
  return r;
}

ExperimentReport experiment_qn_equals_dn(std::int64_t n, const TrialPlan& plan) {
  Stopwatch clock;
  auto r = make_report("qn_equals_dn", n, plan, "two_sample_ks", kQnDnKs.value);
  const auto pairs = run_trials(
      plan.trials,
      [&](std::int64_t t) {
        Rng rq = trial_rng(plan, kSaltQn, t);
        const Box q = lazy_endpoint(rq, n);
        Rng rd = trial_rng(plan, kSaltDn, t);
        StreamingRecorder rec;
        Box d{};
        for (std::int64_t k = 0; k < n; ++k) d = rec.push(rd.uniform());
        return std::pair<int, int>{content(q), content(d)};
      },
      plan.jobs);
  std::vector<double> uq, ud;
  r.columns = {"u_q", "u_d"};
  for (const auto& [a, b] : pairs) {
    uq.push_back(a);
    ud.push_back(b);
    r.rows.push_back({static_cast<double>(a), static_cast<double>(b)});
  }
  r.statistic = ks_two_sample(EmpiricalSample(uq), EmpiricalSample(ud));
  r.pass = r.statistic < r.threshold;
  const double m = static_cast<double>(plan.trials);
  r.extras = {{"p_value", kolmogorov_tail(r.statistic * std::sqrt(m * m / (2 * m)))}};
  r.runtime_seconds = clock.seconds();
  return r;
}

namespace {

double z_target(double z) { return semicircle_quantile(z); }

}  // namespace

ExperimentReport experiment_det_rsk(double z, std::int64_t n, const TrialPlan& plan) {
  Stopwatch clock;
  auto r = make_report("det_rsk", n, plan, "mean_abs_u_error", kDetRsk.value);
  const double target = z_target(z);
  const auto variant = static_cast<std::uint64_t>(std::llround(z * 1e6));
  const auto boxes = run_trials(
      plan.trials,
      [&](std::int64_t t) {
        Rng rng = trial_rng(plan, kSaltDetRsk, t, variant);
        StreamingRecorder rec;
        for (std::int64_t k = 0; k < n; ++k) rec.push(rng.uniform());
        return rec.probe(z);
      },
      plan.jobs);
  const double s = std::sqrt(static_cast<double>(n));
  double err_u = 0, err_v = 0;
  r.columns = {"u_scaled", "v_scaled"};
  for (const Box b : boxes) {
    const double u = (b.i - b.j) / s, v = (b.i + b.j) / s;
    err_u += std::abs(u - target);
    err_v += std::abs(v - omega_star(target));
    r.rows.push_back({u, v});
  }
  r.statistic = err_u / static_cast<double>(boxes.size());
  r.pass = r.statistic < r.threshold;
  r.extras = {{"z", z}, {"u_target", target}, {"mean_abs_v_error", err_v / boxes.size()}};
  r.runtime_seconds = clock.seconds();
  return r;
}

ExperimentReport experiment_det_jdt(double z, std::int64_t n, const TrialPlan& plan) {
  Stopwatch clock;
  auto r = make_report("det_jdt", n, plan, "mean_abs_u_error", kDetJdt.value);
  const double target = -z_target(z);
  const auto variant = static_cast<std::uint64_t>(std::llround(z * 1e6));
  const auto boxes = run_trials(
      plan.trials,
      [&](std::int64_t t) {
        Rng rng = trial_rng(plan, kSaltDetJdt, t, variant);
        StreamingRecorder rec;
        NaturalParamTracker q;
        q.push(rec.push(z));
        for (std::int64_t k = 0; k < n; ++k) q.push(rec.push(rng.uniform()));
        return q.current();
      },
      plan.jobs);
  const double s = std::sqrt(static_cast<double>(n));
  double err_u = 0, err_v = 0;
  r.columns = {"u_scaled", "v_scaled"};
  for (const Box b : boxes) {
    const double u = (b.i - b.j) / s, v = (b.i + b.j) / s;
    err_u += std::abs(u - target);
    err_v += std::abs(v - omega_star(target));
    r.rows.push_back({u, v});
  }
  r.statistic = err_u / static_cast<double>(boxes.size());
  r.pass = r.statistic < r.threshold;
  r.extras = {{"z", z}, {"u_target", target}, {"mean_abs_v_error", err_v / boxes.size()}};
  r.runtime_seconds = clock.seconds();
  return r;
}

ExperimentReport experiment_inverse_rsk(std::int64_t n, int depth, const TrialPlan& plan) {
  Stopwatch clock;
  auto r = make_report("inverse_rsk", n, plan, "mae_1", kInverseMae1.value);
  if (depth <= 0) {
    r.pass = true;
    r.runtime_seconds = clock.seconds();
    return r;
  }
  if (n < depth + 1) throw Error(Errc::DomainError, "n must exceed the recovery depth");
  struct Recovery {
    std::vector<double> truth;
    std::vector<double> estimate;
  };
  const auto rec_trials = run_trials(
      plan.trials,
      [&](std::int64_t t) {
        Rng rng = trial_rng(plan, kSaltInverse, t);
        StreamingRecorder rec;
        std::vector<Box> boxes;
        boxes.reserve(static_cast<std::size_t>(n));
        Recovery out;
        for (std::int64_t k = 0; k < n; ++k) {
          const double x = rng.uniform();
          if (k < depth) out.truth.push_back(x);
          boxes.push_back(rec.push(x));
        }
        StandardTableau tab = tableau_from_boxes(boxes);
        std::vector<Box> scratch;
        for (int k = 1; k <= depth; ++k) {
          if (k > 1) apply_J_in_place(tab, scratch);
          const Box end = infinite_path_prefix(tab, Missing::Infinity).boxes.back();
          out.estimate.push_back(theta_cdf(box_angle(end)));
        }
        return out;
      },
      plan.jobs);
  r.columns.clear();
  for (int k = 1; k <= depth; ++k) {
    r.columns.push_back("x_" + std::to_string(k));
    r.columns.push_back("xhat_" + std::to_string(k));
  }
  for (const auto& trial : rec_trials) {
    std::vector<double> row;
    for (int k = 0; k < depth; ++k) {
      row.push_back(trial.truth[k]);
      row.push_back(trial.estimate[k]);
    }
    r.rows.push_back(std::move(row));
  }
  for (int k = 0; k < depth; ++k) {
    std::vector<double> x, xh;
    double mae = 0;
    for (const auto& trial : rec_trials) {
      x.push_back(trial.truth[k]);
      xh.push_back(trial.estimate[k]);
      mae += std::abs(trial.truth[k] - trial.estimate[k]);
    }
    mae /= static_cast<double>(rec_trials.size());
    r.extras.push_back({"mae_" + std::to_string(k + 1), mae});
    r.extras.push_back({"rank_" + std::to_string(k + 1),
                        rec_trials.size() >= 2 ? spearman(x, xh) : 0.0});
  }
  r.statistic = r.extra("mae_1");
  r.pass = r.statistic < r.threshold && r.extra("rank_1") > kInverseRank.value &&
           (depth < 2 || r.extra("mae_2") < kInverseMae2.value);
  r.runtime_seconds = clock.seconds();
  return r;
}

ExperimentReport experiment_limit_shape(std::int64_t n, const TrialPlan& plan) {
  Stopwatch clock;
  auto r = make_report("limit_shape", n, plan, "p95_sup_distance", kLimitShapeP95.value);
  const auto dist = run_trials(
      plan.trials,
      [&](std::int64_t t) {
        Rng rng = trial_rng(plan, kSaltLimitShape, t);
        StreamingRecorder rec;
        for (std::int64_t k = 0; k < n; ++k) rec.push(rng.uniform());
        return profile_sup_distance(rec.insertion().shape());
      },
      plan.jobs);
  r.columns = {"sup_distance"};
  for (double d : dist) r.rows.push_back({d});
  const EmpiricalSample sample(dist);
  r.statistic = sample.quantile(0.95);
  r.pass = r.statistic < r.threshold;
  r.extras = {{"median", sample.median()}, {"max", sample.values().back()}};
  r.runtime_seconds = clock.seconds();
  return r;
}

ExperimentReport experiment_pieri(std::int64_t n, int k, const TrialPlan& plan) {
  Stopwatch clock;
  auto r = make_report("pieri", n, plan, "abs_mean_m2_error", kPieriM2.value);
  const auto samples = run_trials(
      plan.trials,
      [&](std::int64_t t) {
        Rng rng = trial_rng(plan, kSaltPieri, t);
        return pieri_growth(n, k, rng);
      },
      plan.jobs);
  const double s = std::sqrt(static_cast<double>(n));
  double m1 = 0, m2 = 0, m4 = 0;
  std::vector<double> pooled;
  r.columns = {"trial", "n", "k", "u_scaled"};
  for (std::size_t t = 0; t < samples.size(); ++t) {
    double a1 = 0, a2 = 0, a4 = 0;
    for (int u : samples[t].u_coords) {
      const double x = u / s;
      a1 += x;
      a2 += x * x;
      a4 += x * x * x * x;
      pooled.push_back(x);
      r.rows.push_back({static_cast<double>(t), static_cast<double>(n), static_cast<double>(k), x});
    }
    m1 += a1 / k;
    m2 += a2 / k;
    m4 += a4 / k;
  }
  const double tr = static_cast<double>(samples.size());
  m1 /= tr;
  m2 /= tr;
  m4 /= tr;
  r.statistic = std::abs(m2 - 1.0);
  r.pass = std::abs(m1) < kPieriM1.value && std::abs(m2 - 1.0) < kPieriM2.value &&
           std::abs(m4 - 2.0) < kPieriM4.value;
  r.extras = {{"k", static_cast<double>(k)},
              {"mean_m1", m1},
              {"mean_m2", m2},
              {"mean_m4", m4},
              {"pooled_ks", ks_distance(EmpiricalSample(pooled), semicircle_cdf)}};
  r.runtime_seconds = clock.seconds();
  return r;
}

ExperimentReport experiment_rost(double t, const TrialPlan& plan) {
  Stopwatch clock;
  auto r = make_report("rost", static_cast<std::int64_t>(std::llround(t * t / 6.0)), plan,
                       "fraction_within_tolerance", kRostFraction.value);
  const auto dist = run_trials(
      plan.trials,
      [&](std::int64_t trial) {
        Rng rng = trial_rng(plan, kSaltRost, trial);
        LastPassageGrid grid(rng);
        return rost_hausdorff_distance(grid, t);
      },
      plan.jobs);
  r.columns = {"hausdorff"};
  long within = 0;
  for (double d : dist) {
    r.rows.push_back({d});
    within += d < kRostHausdorff.value;
  }
  r.statistic = static_cast<double>(within) / static_cast<double>(dist.size());
  r.pass = r.statistic >= r.threshold;
  const EmpiricalSample sample(dist);
  r.extras = {{"time", t}, {"median", sample.median()}, {"max", sample.values().back()}};
  r.runtime_seconds = clock.seconds();
  return r;
}

ExperimentReport experiment_phi(int steps, const TrialPlan& plan) {
  Stopwatch clock;
  auto r = make_report("phi", steps, plan, "ks", kPhiKs.value);
  const auto angles = run_trials(
      plan.trials,
      [&](std::int64_t trial) {
        Rng rng = trial_rng(plan, kSaltPhi, trial);
        LastPassageGrid grid(rng);
        return box_angle(follow_interface(grid, steps).back());
      },
      plan.jobs);
  r.columns = {"angle"};
  for (double a : angles) r.rows.push_back({a});
  r.statistic = ks_distance(EmpiricalSample(angles), phi_cdf_total);
  r.pass = r.statistic < r.threshold;
  r.runtime_seconds = clock.seconds();
  return r;
}

ExperimentReport experiment_tasep(double t, const TrialPlan& plan) {
  Stopwatch clock;
  auto r = make_report("tasep", static_cast<std::int64_t>(std::llround(t * t / 6.0)), plan,
                       "ks", kTasepKs.value);
  const auto xs = run_trials(
      plan.trials,
      [&](std::int64_t trial) {
        Rng rng = trial_rng(plan, kSaltTasep, trial);
        LastPassageGrid grid(rng);
        return tasep_second_class(grid, t) / t;
      },
      plan.jobs);
  r.columns = {"X_over_t"};
  for (double x : xs) r.rows.push_back({x});
  r.statistic = ks_distance(EmpiricalSample(xs), uniform_pm1_cdf);
  r.pass = r.statistic < r.threshold;
  r.extras = {{"time", t}};
  r.runtime_seconds = clock.seconds();
  return r;
}

}  // namespace tabdyn
