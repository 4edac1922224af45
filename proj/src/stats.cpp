#include "tabdyn/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>

#include "tabdyn/error.hpp"
#include "tabdyn/laws.hpp"

namespace tabdyn {

EmpiricalSample::EmpiricalSample(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) throw Error(Errc::DomainError, "sample value is not finite");
  }
  std::sort(values_.begin(), values_.end());
}

double EmpiricalSample::cdf(double x) const noexcept {
  if (values_.empty()) return 0.0;
  const auto it = std::upper_bound(values_.begin(), values_.end(), x);
  return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
}

double EmpiricalSample::quantile(double p) const {
  if (values_.empty()) throw Error(Errc::EmptySample, "quantile of an empty sample");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::DomainError, "probability outside [0, 1]");
  const double h = p * static_cast<double>(values_.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values_.size() - 1);
  return values_[lo] + (h - static_cast<double>(lo)) * (values_[hi] - values_[lo]);
}

double EmpiricalSample::mean() const {
  if (values_.empty()) throw Error(Errc::EmptySample, "mean of an empty sample");
  return tabdyn::mean(values_);
}

double mean(std::span<const double> x) {
  if (x.empty()) throw Error(Errc::EmptySample, "mean of an empty sample");
  long double s = 0.0L;
  for (double v : x) s += v;
  return static_cast<double>(s / static_cast<long double>(x.size()));
}

double ks_distance(const EmpiricalSample& sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw Error(Errc::EmptySample, "KS distance of an empty sample");
  const auto& v = sample.values();
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  std::size_t k = 0;
  while (k < v.size()) {
    // group ties: the empirical cdf jumps from k/n to (k + m)/n at v[k]
    std::size_t e = k;
    while (e < v.size() && v[e] == v[k]) ++e;
    const double x = v[k];
    const double f_right = cdf(x);
    const double f_left = cdf(std::nextafter(x, -HUGE_VAL));
    d = std::max(d, std::abs(static_cast<double>(e) / n - f_right));
    d = std::max(d, std::abs(static_cast<double>(k) / n - f_left));
    k = e;
  }
  return d;
}

double ks_two_sample(const EmpiricalSample& a, const EmpiricalSample& b) {
  if (a.empty() || b.empty()) throw Error(Errc::EmptySample, "KS distance of an empty sample");
  const auto& x = a.values();
  const auto& y = b.values();
  const double n = static_cast<double>(x.size());
  const double m = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() || j < y.size()) {
    double t;
    if (j == y.size() || (i < x.size() && x[i] <= y[j])) {
      t = x[i];
    } else {
      t = y[j];
    }
    while (i < x.size() && x[i] == t) ++i;
    while (j < y.size() && y[j] == t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }
  return d;
}

double kolmogorov_tail(double x) {
  if (x <= 0.0) return 1.0;
  double s = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    s += (k % 2 ? 2.0 : -2.0) * term;
    if (term < 1e-17) break;
  }
  return std::clamp(s, 0.0, 1.0);
}

double chi_square_tail(double statistic, double dof) {
  if (dof <= 0) return 1.0;
  if (statistic <= 0) return 1.0;
  boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

ChiSquareResult chi_square_two_sample(std::span<const long> a, std::span<const long> b) {
  if (a.size() != b.size()) throw Error(Errc::DomainError, "tables differ in length");
  double na = 0, nb = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    na += static_cast<double>(a[k]);
    nb += static_cast<double>(b[k]);
  }
  if (na == 0 || nb == 0) throw Error(Errc::EmptySample, "chi-square needs two nonempty samples");
  ChiSquareResult r;
  int columns = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double col = static_cast<double>(a[k] + b[k]);
    if (col == 0) continue;
    ++columns;
    const double ea = col * na / (na + nb);
    const double eb = col * nb / (na + nb);
    r.statistic += (a[k] - ea) * (a[k] - ea) / ea + (b[k] - eb) * (b[k] - eb) / eb;
  }
  r.dof = std::max(0, columns - 1);
  r.p_value = chi_square_tail(r.statistic, r.dof);
  return r;
}

namespace {

std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> rank(x.size());
  std::size_t k = 0;
  while (k < idx.size()) {
    std::size_t e = k;
    while (e < idx.size() && x[idx[e]] == x[idx[k]]) ++e;
    const double r = 0.5 * static_cast<double>(k + e - 1) + 1.0;
    for (std::size_t q = k; q < e; ++q) rank[idx[q]] = r;
    k = e;
  }
  return rank;
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(Errc::DomainError, "samples differ in length");
  if (x.size() < 2) throw Error(Errc::EmptySample, "rank correlation needs two points");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double mx = mean(rx), my = mean(ry);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t k = 0; k < rx.size(); ++k) {
    sxy += (rx[k] - mx) * (ry[k] - my);
    sxx += (rx[k] - mx) * (rx[k] - mx);
    syy += (ry[k] - my) * (ry[k] - my);
  }
  if (sxx == 0 || syy == 0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

double profile_sup_distance(const YoungDiagram& lambda) {
  if (lambda.empty()) throw Error(Errc::EmptyInput, "profile distance needs |λ| >= 1");
  const double s = std::sqrt(static_cast<double>(lambda.size()));
  const RescaledProfile phi(lambda, s);
  double d = 0.0;
  for (const auto& p : phi.base().breakpoints()) {
    const double u = p.u / s;
    d = std::max(d, std::abs(p.v / s - omega_star(u)));
  }
  for (double u : {-2.0, 2.0}) d = std::max(d, std::abs(phi(u) - omega_star(u)));
  return d;
}

}  // namespace tabdyn
