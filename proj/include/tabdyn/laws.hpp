#pragma once

// Closed-form limit objects: Ω*, the semicircle law, the Θ law, the Φ law
// and the Rost parabola.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tabdyn/rng.hpp"

namespace tabdyn {

/// (2/π)(u asin(u/2) + √(4 − u²)) on [−2, 2], |u| outside.
double omega_star(double u) noexcept;
/// Derivative of Ω*: (2/π) asin(u/2) inside, sign(u) outside.
double omega_star_slope(double u) noexcept;

double semicircle_density(double t) noexcept;
double semicircle_cdf(double t) noexcept;
/// Throws DomainError unless p ∈ [0, 1].
double semicircle_quantile(double p);
double semicircle_sample(Rng& rng);

/// atan2(Ω*(w) − w, Ω*(w) + w); throws DomainError for |w| > 2.
double theta_of_w(double w);
/// Inverse of theta_of_w on [0, π/2].
double w_of_theta(double s);
double theta_cdf(double s);
double theta_quantile(double p);
/// Density of Θ by the chain rule through Ω*: at w = θ⁻¹(s) it equals
/// (Ω*(w)² + w²)/4.
double theta_density(double s);

/// √sin x / (√sin x + √cos x) on [0, π/2].
double phi_cdf(double x);
double phi_density(double x);
double phi_quantile(double p);

/// √x + √y ≤ 1; throws DomainError for negative coordinates.
bool rost_shape_contains(double x, double y);
/// ½(1 + u²) on |u| ≤ 1.
double rost_boundary_v(double u);

/// Uniform law on [−1, 1].
double uniform_pm1_cdf(double x) noexcept;

/// A law exposed through the CLI and the KS machinery.
struct LawTable {
  std::string name;
  std::function<double(double)> cdf;
  std::function<double(double)> quantile;
  std::function<double(double)> density;
  double lo = 0.0;
  double hi = 0.0;
};

/// omega_star, semicircle, theta, phi, uniform; nullopt for anything else.
std::optional<LawTable> law_by_name(std::string_view name);
std::vector<std::string> law_names();

/// Safeguarded bisection for an increasing function on [lo, hi].
double bisect_increasing(const std::function<double(double)>& f, double target, double lo,
                         double hi);

}  // namespace tabdyn
