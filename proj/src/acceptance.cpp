#include "tabdyn/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

#include "tabdyn/corner_growth.hpp"
#include "tabdyn/error.hpp"
#include "tabdyn/jdt.hpp"
#include "tabdyn/laws.hpp"
#include "tabdyn/particles.hpp"
#include "tabdyn/plancherel.hpp"
#include "tabdyn/rsk.hpp"
#include "tabdyn/stats.hpp"
#include "tabdyn/trials.hpp"

namespace tabdyn {

using namespace constants;

Suite parse_suite(std::string_view s) {
  if (s == "exact") return Suite::Exact;
  if (s == "mc") return Suite::MonteCarlo;
  if (s == "all") return Suite::All;
  throw Error(Errc::Usage, "suite must be exact, mc or all, not '" + std::string(s) + "'");
}

Scale parse_scale(std::string_view s) {
  if (s == "small") return Scale::Small;
  if (s == "full") return Scale::Full;
  throw Error(Errc::Usage, "scale must be small or full, not '" + std::string(s) + "'");
}

namespace {

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

std::vector<double> iota_values(int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  std::iota(xs.begin(), xs.end(), 1.0);
  return xs;
}

// Σ (f^λ)² = n! for n ≤ 10, and f^λ equals the number of enumerated
// tableaux for |λ| ≤ 8.
CriterionResult dimension_identity() {
  CriterionResult r;
  long shapes = 0;
  bool ok = true;
  for (int n = 0; n <= 10; ++n) {
    BigInt sum = 0;
    for (const auto& lambda : partitions_of(n)) {
      const BigInt f = count_syt(lambda);
      sum += f * f;
      if (n <= 8) {
        ok &= f == BigInt(all_standard_tableaux(lambda).size());
        ++shapes;
      }
    }
    ok &= sum == factorial(n);
  }
  r.pass = ok;
  r.detail = fmt("n <= 10 sums, %ld shapes enumerated", shapes);
  return r;
}

CriterionResult slide_bijection() {
  CriterionResult r;
  long tableaux = 0, failures = 0;
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto all = all_standard_tableaux(lambda);
      std::set<StandardTableau> images;
      for (const auto& t : all) {
        ++tableaux;
        const auto s = jdt_slide(t).tableau;
        const auto mu = s.shape();
        if (mu.size() != n - 1 || !mu.contained_in(lambda)) ++failures;
        if (!(jdt_inverse(s, lambda) == t)) ++failures;
        images.insert(s);
      }
      std::size_t target = 0;
      for (const Box b : lambda.removable_boxes())
        target += all_standard_tableaux(lambda.without_box(b)).size();
      if (images.size() != all.size() || images.size() != target) ++failures;
    }
  r.pass = failures == 0;
  r.detail = fmt("%ld tableaux, %ld failures", tableaux, failures);
  return r;
}

CriterionResult factor_identity(const AcceptanceOptions& o) {
  CriterionResult r;
  long checked = 0, failures = 0;
  for (int n = 1; n <= 6; ++n) {
    auto xs = iota_values(n);
    do {
      const auto tail = std::span<const double>(xs).subspan(1);
      failures += !(apply_J(rsk_finite(xs).recording) == rsk_finite(tail).recording);
      ++checked;
    } while (std::next_permutation(xs.begin(), xs.end()));
  }
  const auto random_failures = run_trials(
      10000,
      [&](std::int64_t t) {
        Rng rng(o.seed, trial_stream(kSaltFactor, static_cast<std::uint64_t>(t)));
        std::vector<double> xs(1 + rng.below(9));
        for (double& x : xs) x = rng.uniform();
        const auto tail = std::span<const double>(xs).subspan(1);
        return static_cast<int>(!(apply_J(rsk_finite(xs).recording) == rsk_finite(tail).recording));
      },
      o.jobs);
  failures += std::accumulate(random_failures.begin(), random_failures.end(), 0L);
  checked += static_cast<long>(random_failures.size());
  r.pass = failures == 0;
  r.detail = fmt("%ld inputs, %ld failures", checked, failures);
  return r;
}

CriterionResult rsk_symmetries() {
  CriterionResult r;
  long checked = 0, failures = 0;
  for (int n = 0; n <= 6; ++n) {
    auto xs = iota_values(n);
    do {
      const auto shape = rsk_finite(xs).shape;
      auto rev = xs;
      std::reverse(rev.begin(), rev.end());
      auto comp = xs;
      for (double& x : comp) x = n + 1 - x;
      auto both = comp;
      std::reverse(both.begin(), both.end());
      failures += !(rsk_finite(rev).shape == shape.transpose());
      failures += !(rsk_finite(comp).shape == shape.transpose());
      failures += !(rsk_finite(both).shape == shape);
      ++checked;
    } while (std::next_permutation(xs.begin(), xs.end()));
  }
  r.pass = failures == 0;
  r.detail = fmt("%ld permutations, %ld failures", checked, failures);
  return r;
}

CriterionResult measure_preservation() {
  CriterionResult r;
  std::map<StandardTableau, BigRational> pushed;
  for (const auto& lambda : partitions_of(5))
    for (const auto& t : all_standard_tableaux(lambda))
      pushed[apply_J(t)] += cylinder_probability(t);
  long cylinders = 0, failures = 0;
  for (const auto& mu : partitions_of(4))
    for (const auto& s : all_standard_tableaux(mu)) {
      ++cylinders;
      const BigRational target =
          BigRational(count_syt(mu)) / BigRational(factorial(4));
      failures += !(pushed[s] == target);
    }
  failures += static_cast<long>(pushed.size()) != cylinders;
  r.pass = failures == 0;
  r.detail = fmt("%ld cylinders, %ld mismatches", cylinders, failures);
  return r;
}

CriterionResult enhanced_equivalence(const AcceptanceOptions& o) {
  CriterionResult r;
  const auto mismatches = run_trials(
      10000,
      [&](std::int64_t t) {
        Rng rng(o.seed, trial_stream(kSaltEnhanced, static_cast<std::uint64_t>(t)));
        const auto trace = sample_growth_rsk(1000, rng);
        return static_cast<int>(!(simulate_enhanced(trace) == second_class_from_growth(trace)));
      },
      o.jobs);
  const long bad = std::accumulate(mismatches.begin(), mismatches.end(), 0L);
  r.pass = bad == 0;
  r.detail = fmt("10000 traces of length 1000, %ld mismatches", bad);
  return r;
}

CriterionResult interface_duality(const AcceptanceOptions& o) {
  CriterionResult r;
  const auto lengths = run_trials(
      1000,
      [&](std::int64_t t) {
        Rng rng(o.seed, trial_stream(kSaltInterface, static_cast<std::uint64_t>(t)));
        const CornerGrowthRun run(50, rng);
        const auto a = interface_by_colour(run);
        const auto b = interface_by_jdt(run);
        return a.boxes == b.boxes ? static_cast<long>(a.boxes.size()) : -1L;
      },
      o.jobs);
  const long bad = std::count(lengths.begin(), lengths.end(), -1L);
  double mean_len = 0;
  for (long l : lengths) mean_len += static_cast<double>(std::max(l, 0L));
  mean_len /= static_cast<double>(lengths.size());
  r.pass = bad == 0;
  r.detail = fmt("1000 runs in a 50x50 box, %ld mismatches, mean path length %.1f", bad, mean_len);
  return r;
}

CriterionResult transitions_and_samplers(const AcceptanceOptions& o) {
  CriterionResult r;
  long shapes = 0, bad = 0;
  for (int n = 0; n <= 12; ++n)
    for (const auto& lambda : partitions_of(n)) {
      BigRational sum = 0;
      for (const auto& t : transition_probs(lambda)) sum += t.probability;
      bad += !(sum == 1);
      ++shapes;
    }
  const auto parts = partitions_of(6);
  const auto index_of = [&](const YoungDiagram& d) {
    return static_cast<std::size_t>(std::lower_bound(parts.begin(), parts.end(), d,
                                                     [](const auto& a, const auto& b) {
                                                       return b < a;
                                                     }) -
                                    parts.begin());
  };
  const int trials = 20000;
  const auto shapes_rsk = run_trials(
      trials,
      [&](std::int64_t t) {
        Rng rng(o.seed, trial_stream(kSaltSamplerRsk, static_cast<std::uint64_t>(t)));
        return index_of(sample_growth_rsk(6, rng).shape());
      },
      o.jobs);
  const auto shapes_markov = run_trials(
      trials,
      [&](std::int64_t t) {
        Rng rng(o.seed, trial_stream(kSaltSamplerMarkov, static_cast<std::uint64_t>(t)));
        return index_of(sample_growth_markov(6, rng).shape());
      },
      o.jobs);
  std::vector<long> a(parts.size()), b(parts.size());
  for (std::size_t k : shapes_rsk) ++a.at(k);
  for (std::size_t k : shapes_markov) ++b.at(k);
  const auto chi = chi_square_two_sample(a, b);
  r.pass = bad == 0 && chi.p_value > kChiSquareP.value;
  r.detail = fmt("%ld shapes summed exactly, %ld failures; chi-square p = %.4f (> %g)", shapes,
                 bad, chi.p_value, kChiSquareP.value);
  return r;
}

// Full-scale parameters with reduced counterparts for quick runs.
struct Params {
  std::int64_t theta_n, theta_trials, theta_trend_n, theta_trend_trials, theta_batch;
  std::int64_t sc_n, sc_trials;
  std::int64_t qd_n, qd_trials;
  std::int64_t ls_n, ls_trials, ls_lo_n, ls_lo_trials, ls_hi_n, ls_hi_trials;
  std::int64_t pieri_n, pieri_trials;
  std::int64_t det_n, det_trials;
  std::int64_t inv_n, inv_trials;
  double rost_t;
  std::int64_t rost_trials;
  int phi_steps;
  std::int64_t phi_trials;
  double tasep_t;
  std::int64_t tasep_trials;
};

// t with about 10^5 boxes or events: the region {G ≤ t} has area ≈ t²/6.
constexpr double kTimeFor1e5 = 774.6;

Params params(Scale s) {
  if (s == Scale::Full)
    return {10000, 2000, 1000, 10000, 200, 10000, 2000, 50, 10000, 10000, 50, 1000, 50,
            100000, 10, 10000, 200, 100000, 100, 100000, 200, kTimeFor1e5, 50, 1000, 2000,
            kTimeFor1e5, 2000};
  return {2000, 500, 250, 2000, 100, 2000, 500, 50, 10000, 10000, 50, 1000, 50, 30000, 10,
          10000, 200, 100000, 20, 100000, 50, kTimeFor1e5, 20, 1000, 500, kTimeFor1e5, 500};
}

// At reduced trial counts a KS threshold below the 1% Kolmogorov critical
// value of the sample size is widened to it.
double ks_threshold(double base, Scale s, double effective_n) {
  if (s == Scale::Full) return base;
  return std::max(base, 1.63 / std::sqrt(effective_n));
}

double batch_median_ks(const ExperimentReport& r, std::int64_t batch,
                       const std::function<double(double)>& cdf) {
  std::vector<double> ks;
  for (std::size_t start = 0; start + batch <= r.rows.size(); start += batch) {
    std::vector<double> xs;
    for (std::size_t k = start; k < start + batch; ++k) xs.push_back(r.rows[k][0]);
    ks.push_back(ks_distance(EmpiricalSample(std::move(xs)), cdf));
  }
  return EmpiricalSample(std::move(ks)).median();
}

double theta_cdf_total(double s) {
  return s <= 0 ? 0.0 : s >= std::numbers::pi / 2 ? 1.0 : theta_cdf(s);
}

CriterionResult theta_law(const AcceptanceOptions& o, const Params& p) {
  CriterionResult r;
  const auto hi = experiment_theta(p.theta_n, {p.theta_trials, o.seed, o.jobs});
  const auto lo = experiment_theta(p.theta_trend_n, {p.theta_trend_trials, o.seed, o.jobs});
  const double thr = ks_threshold(kThetaKs.value, o.scale, static_cast<double>(p.theta_trials));
  const double m_lo = batch_median_ks(lo, p.theta_batch, theta_cdf_total);
  const double m_hi = batch_median_ks(hi, p.theta_batch, theta_cdf_total);
  r.pass = hi.statistic < thr && m_hi < m_lo;
  r.detail = fmt("n=%ld trials=%ld KS=%.4f (< %.3f); median KS over batches of %ld: "
                 "n=%ld %.4f -> n=%ld %.4f",
                 long(p.theta_n), long(p.theta_trials), hi.statistic, thr, long(p.theta_batch),
                 long(p.theta_trend_n), m_lo, long(p.theta_n), m_hi);
  r.reports = {hi, lo};
  return r;
}

CriterionResult second_class_speed(const AcceptanceOptions& o, const Params& p) {
  CriterionResult r;
  const auto rep = experiment_second_class(p.sc_n, {p.sc_trials, o.seed, o.jobs});
  const double thr = ks_threshold(kSecondClassKs.value, o.scale, static_cast<double>(p.sc_trials));
  r.pass = rep.statistic < thr;
  r.detail = fmt("n=%ld trials=%ld KS=%.4f (< %.3f); mean %.4f +- %.4f", long(p.sc_n),
                 long(p.sc_trials), rep.statistic, thr, rep.extra("mean"),
                 rep.extra("mean_stderr"));
  r.reports = {rep};
  return r;
}

CriterionResult qn_equals_dn(const AcceptanceOptions& o, const Params& p) {
  CriterionResult r;
  const auto rep = experiment_qn_equals_dn(p.qd_n, {p.qd_trials, o.seed, o.jobs});
  const double thr =
      ks_threshold(kQnDnKs.value, o.scale, static_cast<double>(p.qd_trials) / 2.0);
  r.pass = rep.statistic < thr;
  r.detail = fmt("n=%ld trials=%ld two-sample KS=%.4f (< %.3f), p=%.3f", long(p.qd_n),
                 long(p.qd_trials), rep.statistic, thr, rep.extra("p_value"));
  r.reports = {rep};
  return r;
}

CriterionResult limit_shape(const AcceptanceOptions& o, const Params& p) {
  CriterionResult r;
  const auto mid = experiment_limit_shape(p.ls_n, {p.ls_trials, o.seed, o.jobs});
  const auto lo = experiment_limit_shape(p.ls_lo_n, {p.ls_lo_trials, o.seed, o.jobs});
  const auto hi = experiment_limit_shape(p.ls_hi_n, {p.ls_hi_trials, o.seed, o.jobs});
  r.pass = mid.statistic < kLimitShapeP95.value && hi.extra("median") < lo.extra("median");
  r.detail = fmt("n=%ld p95=%.4f (< %.2f); median n=%ld %.4f -> n=%ld %.4f", long(p.ls_n),
                 mid.statistic, kLimitShapeP95.value, long(p.ls_lo_n), lo.extra("median"),
                 long(p.ls_hi_n), hi.extra("median"));
  r.reports = {mid, lo, hi};
  return r;
}

CriterionResult pieri(const AcceptanceOptions& o, const Params& p) {
  CriterionResult r;
  const int k = default_pieri_k(p.pieri_n);
  const auto rep = experiment_pieri(p.pieri_n, k, {p.pieri_trials, o.seed, o.jobs});
  r.pass = rep.pass;
  r.detail = fmt("n=%ld k=%d trials=%ld M1=%.4f (|.| < %.2f) M2=%.4f (+-%.1f) M4=%.4f (+-%.1f)",
                 long(p.pieri_n), k, long(p.pieri_trials), rep.extra("mean_m1"), kPieriM1.value,
                 rep.extra("mean_m2"), kPieriM2.value, rep.extra("mean_m4"), kPieriM4.value);
  r.reports = {rep};
  return r;
}

template <class Experiment>
CriterionResult determinism(const AcceptanceOptions& o, const Params& p, Experiment exp,
                            double tolerance) {
  CriterionResult r;
  r.pass = true;
  std::string parts;
  for (double z : {0.2, 0.5, 0.8}) {
    const auto rep = exp(z, p.det_n, TrialPlan{p.det_trials, o.seed, o.jobs});
    r.pass &= rep.statistic < tolerance;
    parts += fmt(" z=%.1f: %.4f (target u %.3f)", z, rep.statistic, rep.extra("u_target"));
    r.reports.push_back(rep);
  }
  r.detail = fmt("n=%ld trials=%ld mean |u - target| < %.2f;", long(p.det_n), long(p.det_trials),
                 tolerance) + parts;
  return r;
}

CriterionResult inverse_rsk(const AcceptanceOptions& o, const Params& p) {
  CriterionResult r;
  const auto rep = experiment_inverse_rsk(p.inv_n, 2, {p.inv_trials, o.seed, o.jobs});
  r.pass = rep.pass;
  r.detail = fmt("n=%ld trials=%ld MAE1=%.4f (< %.2f) rank1=%.4f (> %.2f) MAE2=%.4f (< %.2f)",
                 long(p.inv_n), long(p.inv_trials), rep.extra("mae_1"), kInverseMae1.value,
                 rep.extra("rank_1"), kInverseRank.value, rep.extra("mae_2"), kInverseMae2.value);
  r.reports = {rep};
  return r;
}

CriterionResult rost(const AcceptanceOptions& o, const Params& p) {
  CriterionResult r;
  const auto rep = experiment_rost(p.rost_t, {p.rost_trials, o.seed, o.jobs});
  r.pass = rep.pass;
  r.detail = fmt("t=%.1f (~%ld boxes) runs=%ld within %.2f: %.2f (>= %.2f); median %.4f max %.4f",
                 p.rost_t, long(rep.n), long(p.rost_trials), kRostHausdorff.value, rep.statistic,
                 kRostFraction.value, rep.extra("median"), rep.extra("max"));
  r.reports = {rep};
  return r;
}

CriterionResult phi_law(const AcceptanceOptions& o, const Params& p) {
  CriterionResult r;
  const auto rep = experiment_phi(p.phi_steps, {p.phi_trials, o.seed, o.jobs});
  const double thr = ks_threshold(kPhiKs.value, o.scale, static_cast<double>(p.phi_trials));
  r.pass = rep.statistic < thr;
  r.detail = fmt("k=%d runs=%ld KS=%.4f (< %.3f)", p.phi_steps, long(p.phi_trials),
                 rep.statistic, thr);
  r.reports = {rep};
  return r;
}

CriterionResult tasep(const AcceptanceOptions& o, const Params& p) {
  CriterionResult r;
  const auto rep = experiment_tasep(p.tasep_t, {p.tasep_trials, o.seed, o.jobs});
  const double thr = ks_threshold(kTasepKs.value, o.scale, static_cast<double>(p.tasep_trials));
  r.pass = rep.statistic < thr;
  r.detail = fmt("t=%.1f (~%ld events) runs=%ld KS=%.4f (< %.3f)", p.tasep_t, long(rep.n),
                 long(p.tasep_trials), rep.statistic, thr);
  r.reports = {rep};
  return r;
}

CriterionResult theta_density_shape() {
  CriterionResult r;
  constexpr double half_pi = std::numbers::pi / 2;
  const int n = 20000;
  const double h = half_pi / n;
  double integral = theta_density(0.0) + theta_density(half_pi);
  double peak = 0.0;
  bool finite = true;
  for (int k = 0; k <= n; ++k) {
    const double f = theta_density(k * h);
    finite &= std::isfinite(f);
    peak = std::max(peak, f);
    if (k > 0 && k < n) integral += f * (k % 2 ? 4.0 : 2.0);
  }
  integral *= h / 3.0;
  const double a = theta_cdf(std::numbers::pi / 8), b = theta_cdf(3 * std::numbers::pi / 8);
  const double ends = a + (1.0 - b), middle = b - a;
  r.pass = finite && std::abs(integral - 1.0) < kDensityIntegral.value && ends > middle;
  r.detail = fmt("max density %.4f, integral - 1 = %.2e (|.| < %g), end mass %.4f vs middle %.4f",
                 peak, integral - 1.0, kDensityIntegral.value, ends, middle);
  return r;
}

const char* kTitles[kCriterionCount] = {
    "dimension identity and hook formula",
    "finite slide bijection",
    "J commutes with RSK",
    "RSK shape symmetries",
    "J preserves Plancherel cylinders",
    "second-class particle equivalence",
    "competition interface duality",
    "transition sums and sampler agreement",
    "Theta law of the jdt angle",
    "second-class particle speed",
    "q_n and d_n equal in law",
    "limit shape",
    "Pieri growth moments",
    "determinism of RSK insertion",
    "determinism of jeu de taquin",
    "inverse RSK recovery",
    "Rost limit shape",
    "Phi law of the competition interface",
    "classical TASEP second-class speed",
    "Theta density shape",
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& o) {
  if (id < 1 || id > kCriterionCount) throw Error(Errc::DomainError, "no criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  const Params p = params(o.scale);
  CriterionResult r;
  switch (id) {
    case 1: r = dimension_identity(); break;
    case 2: r = slide_bijection(); break;
    case 3: r = factor_identity(o); break;
    case 4: r = rsk_symmetries(); break;
    case 5: r = measure_preservation(); break;
    case 6: r = enhanced_equivalence(o); break;
    case 7: r = interface_duality(o); break;
    case 8: r = transitions_and_samplers(o); break;
    case 9: r = theta_law(o, p); break;
    case 10: r = second_class_speed(o, p); break;
    case 11: r = qn_equals_dn(o, p); break;
    case 12: r = limit_shape(o, p); break;
    case 13: r = pieri(o, p); break;
    case 14: r = determinism(o, p, experiment_det_rsk, kDetRsk.value); break;
    case 15: r = determinism(o, p, experiment_det_jdt, kDetJdt.value); break;
    case 16: r = inverse_rsk(o, p); break;
    case 17: r = rost(o, p); break;
    case 18: r = phi_law(o, p); break;
    case 19: r = tasep(o, p); break;
    case 20: r = theta_density_shape(); break;
  }
  r.id = id;
  r.title = kTitles[id - 1];
  r.exact = id <= 8 || id == 20;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    const bool exact = id <= 8 || id == 20;
    if (options.suite == Suite::Exact && !exact) continue;
    if (options.suite == Suite::MonteCarlo && exact) continue;
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), id) == options.only.end())
      continue;
    out.push_back(run_criterion(id, options));
    if (options.on_result) options.on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  return fmt("%s %2d  %s: ", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str()) + r.detail +
         fmt(" (%.1f s)", r.seconds);
}

}  // namespace tabdyn
