#include "tabdyn/laws.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tabdyn/error.hpp"

namespace tabdyn {

using std::numbers::pi;

double omega_star(double u) noexcept {
  if (std::abs(u) >= 2.0) return std::abs(u);
  return (2.0 / pi) * (u * std::asin(u / 2.0) + std::sqrt(4.0 - u * u));
}

double omega_star_slope(double u) noexcept {
  if (u >= 2.0) return 1.0;
  if (u <= -2.0) return -1.0;
  return (2.0 / pi) * std::asin(u / 2.0);
}

double semicircle_density(double t) noexcept {
  if (std::abs(t) >= 2.0) return 0.0;
  return std::sqrt(4.0 - t * t) / (2.0 * pi);
}

double semicircle_cdf(double t) noexcept {
  if (t <= -2.0) return 0.0;
  if (t >= 2.0) return 1.0;
  return 0.5 + (t * std::sqrt(4.0 - t * t) / 4.0 + std::asin(t / 2.0)) / pi;
}

double bisect_increasing(const std::function<double(double)>& f, double target, double lo,
                         double hi) {
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double semicircle_quantile(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::DomainError, "probability outside [0, 1]");
  if (p == 0.0) return -2.0;
  if (p == 1.0) return 2.0;
  return bisect_increasing(semicircle_cdf, p, -2.0, 2.0);
}

double semicircle_sample(Rng& rng) { return semicircle_quantile(rng.uniform()); }

double theta_of_w(double w) {
  if (!(std::abs(w) <= 2.0)) throw Error(Errc::DomainError, "|w| must not exceed 2");
  const double om = omega_star(w);
  return std::atan2(om - w, om + w);
}

double w_of_theta(double s) {
  if (!(s >= 0.0 && s <= pi / 2)) throw Error(Errc::DomainError, "angle outside [0, π/2]");
  // theta_of_w is decreasing, so bisect on -w
  return -bisect_increasing([](double v) { return theta_of_w(-v); }, s, -2.0, 2.0);
}

double theta_cdf(double s) {
  if (!(s >= 0.0 && s <= pi / 2)) throw Error(Errc::DomainError, "angle outside [0, π/2]");
  if (s == 0.0) return 0.0;
  if (s == pi / 2) return 1.0;
  return 1.0 - semicircle_cdf(w_of_theta(s));
}

double theta_quantile(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::DomainError, "probability outside [0, 1]");
  return theta_of_w(semicircle_quantile(1.0 - p));
}

double theta_density(double s) {
  const double w = w_of_theta(s);
  const double om = omega_star(w);
  return (om * om + w * w) / 4.0;
}

double phi_cdf(double x) {
  if (!(x >= 0.0 && x <= pi / 2)) throw Error(Errc::DomainError, "angle outside [0, π/2]");
  const double a = std::sqrt(std::sin(x));
  const double b = std::sqrt(std::cos(x));
  return a / (a + b);
}

double phi_density(double x) {
  if (!(x >= 0.0 && x <= pi / 2)) throw Error(Errc::DomainError, "angle outside [0, π/2]");
  const double a = std::sqrt(std::sin(x));
  const double b = std::sqrt(std::cos(x));
  return 1.0 / (2.0 * a * b * (a + b) * (a + b));
}

double phi_quantile(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::DomainError, "probability outside [0, 1]");
  if (p == 0.0) return 0.0;
  if (p == 1.0) return pi / 2;
  return bisect_increasing(phi_cdf, p, 0.0, pi / 2);
}

bool rost_shape_contains(double x, double y) {
  if (x < 0.0 || y < 0.0) throw Error(Errc::DomainError, "Rost region lives in x, y >= 0");
  return std::sqrt(x) + std::sqrt(y) <= 1.0;
}

double rost_boundary_v(double u) {
  if (!(std::abs(u) <= 1.0)) throw Error(Errc::DomainError, "|u| must not exceed 1");
  return 0.5 * (1.0 + u * u);
}

double uniform_pm1_cdf(double x) noexcept { return std::clamp(0.5 * (x + 1.0), 0.0, 1.0); }

std::optional<LawTable> law_by_name(std::string_view name) {
  if (name == "omega_star") {
    return LawTable{"omega_star", omega_star, nullptr, omega_star_slope, -3.0, 3.0};
  }
  if (name == "semicircle") {
    return LawTable{"semicircle", semicircle_cdf, semicircle_quantile, semicircle_density,
                    -2.0, 2.0};
  }
  if (name == "theta") {
    return LawTable{"theta", [](double s) { return s <= 0 ? 0.0 : s >= pi / 2 ? 1.0 : theta_cdf(s); },
                    theta_quantile, theta_density, 0.0, pi / 2};
  }
  if (name == "phi") {
    return LawTable{"phi", [](double s) { return s <= 0 ? 0.0 : s >= pi / 2 ? 1.0 : phi_cdf(s); },
                    phi_quantile, phi_density, 0.0, pi / 2};
  }
  if (name == "uniform") {
    return LawTable{"uniform", uniform_pm1_cdf, [](double p) { return 2.0 * p - 1.0; },
                    [](double x) { return std::abs(x) <= 1.0 ? 0.5 : 0.0; }, -1.0, 1.0};
  }
  return std::nullopt;
}

std::vector<std::string> law_names() {
  return {"omega_star", "semicircle", "theta", "phi", "uniform"};
}

}  // namespace tabdyn
