#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tabdyn/error.hpp"
#include "tabdyn/laws.hpp"
#include "tabdyn/stats.hpp"

using namespace tabdyn;
using std::numbers::pi;

namespace {

// Printed closed form; arccot taken with values in (−π/2, π/2).
double pi_formula(double w) {
  const double arg = (2.0 / pi) * (std::asin(w / 2.0) + std::sqrt(4.0 - w * w) / w);
  return pi / 4.0 - std::atan(1.0 / arg);
}

// Composite Simpson rule.
template <class F>
double simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int k = 1; k < n; ++k) s += f(a + k * h) * (k % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("omega star examples") {
  CHECK(omega_star(0.0) == doctest::Approx(4.0 / pi).epsilon(1e-12));
  CHECK(omega_star(2.0) == doctest::Approx(2.0));
  CHECK(omega_star(-2.0) == doctest::Approx(2.0));
  CHECK(omega_star(3.0) == 3.0);
  CHECK(omega_star(-5.5) == 5.5);
}

TEST_CASE("omega star is even, 1-Lipschitz and above |u|") {
  const int n = 10000;
  double prev = omega_star(-6.0);
  for (int k = 1; k <= n; ++k) {
    const double u = -6.0 + 12.0 * k / n;
    const double v = omega_star(u);
    CHECK(v == doctest::Approx(omega_star(-u)).epsilon(1e-14));
    CHECK(v >= std::abs(u) - 1e-15);
    if (std::abs(u) >= 2.0) CHECK(v == std::abs(u));
    CHECK(std::abs(v - prev) <= 12.0 / n + 1e-12);
    CHECK(std::abs(omega_star_slope(u)) <= 1.0);
    prev = v;
  }
  for (double u : {-1.5, -0.3, 0.4, 1.9}) {
    const double h = 1e-6;
    CHECK(omega_star_slope(u) ==
          doctest::Approx((omega_star(u + h) - omega_star(u - h)) / (2 * h)).epsilon(1e-6));
  }
}

TEST_CASE("semicircle examples") {
  CHECK(semicircle_cdf(0.0) == doctest::Approx(0.5));
  CHECK(semicircle_cdf(2.0) == 1.0);
  CHECK(semicircle_cdf(-2.0) == 0.0);
  CHECK(semicircle_cdf(5.0) == 1.0);
  CHECK(semicircle_cdf(-5.0) == 0.0);
  // independent integration of the density
  const double f1 = simpson([](double t) { return std::sqrt(4.0 - t * t) / (2.0 * pi); }, -2.0,
                            1.0, 200000);
  CHECK(semicircle_cdf(1.0) == doctest::Approx(f1).epsilon(1e-7));
  CHECK(semicircle_cdf(1.0) == doctest::Approx(0.80450).epsilon(1e-5));
  CHECK(semicircle_density(0.0) == doctest::Approx(1.0 / pi));
  CHECK(semicircle_density(3.0) == 0.0);
  CHECK_THROWS_AS(semicircle_quantile(1.5), Error);
}

TEST_CASE("semicircle quantile round trip") {
  for (int k = 0; k <= 10000; ++k) {
    const double p = k / 10000.0;
    CHECK(std::abs(semicircle_cdf(semicircle_quantile(p)) - p) < 1e-9);
  }
  CHECK(semicircle_quantile(0.0) == doctest::Approx(-2.0));
  CHECK(semicircle_quantile(1.0) == doctest::Approx(2.0));
}

TEST_CASE("semicircle sampler") {
  Rng rng(31, 0);
  std::vector<double> xs(100000);
  for (double& x : xs) x = semicircle_sample(rng);
  CHECK(ks_distance(EmpiricalSample(std::move(xs)), semicircle_cdf) < 0.006);
}

TEST_CASE("theta map examples") {
  CHECK(theta_of_w(2.0) == doctest::Approx(0.0));
  CHECK(theta_of_w(-2.0) == doctest::Approx(pi / 2));
  CHECK(theta_of_w(0.0) == doctest::Approx(pi / 4));
  CHECK(theta_of_w(1.0) == doctest::Approx(0.177104).epsilon(1e-5));
  CHECK(theta_of_w(1.0) == doctest::Approx(pi_formula(1.0)).epsilon(1e-12));
  CHECK_THROWS_AS(theta_of_w(2.1), Error);
  CHECK_THROWS_AS(theta_of_w(-2.1), Error);
}

TEST_CASE("theta map is decreasing and agrees with the printed formula") {
  const int n = 10000;
  double prev = theta_of_w(-2.0);
  for (int k = 1; k <= n; ++k) {
    const double w = -2.0 + 4.0 * k / n;
    const double s = theta_of_w(w);
    CHECK(s < prev);
    CHECK(s >= 0.0);
    CHECK(s <= pi / 2);
    if (k != n / 2) CHECK(std::abs(s - pi_formula(w)) < 1e-9);
    CHECK(w_of_theta(s) == doctest::Approx(w).epsilon(1e-9));
    prev = s;
  }
}

TEST_CASE("theta law examples and properties") {
  CHECK(theta_cdf(0.0) == doctest::Approx(0.0));
  CHECK(theta_cdf(pi / 2) == doctest::Approx(1.0));
  CHECK(theta_cdf(pi / 4) == doctest::Approx(0.5));
  CHECK(theta_cdf(theta_of_w(1.0)) == doctest::Approx(1.0 - semicircle_cdf(1.0)).epsilon(1e-9));
  CHECK(theta_cdf(0.17685) == doctest::Approx(0.19550).epsilon(1e-3));
  CHECK_THROWS_AS(theta_cdf(-0.1), Error);
  CHECK_THROWS_AS(theta_cdf(2.0), Error);
  const double integral = simpson(theta_density, 0.0, pi / 2, 20000);
  CHECK(std::abs(integral - 1.0) < 1e-6);
  for (int k = 1; k < 100; ++k) {
    const double s = (pi / 2) * k / 100.0;
    const double h = 1e-6;
    const double fd = (theta_cdf(s + h) - theta_cdf(s - h)) / (2 * h);
    CHECK(std::abs(theta_density(s) - fd) < 1e-5);
  }
  for (int k = 1; k < 1000; ++k) {
    const double p = k / 1000.0;
    CHECK(std::abs(theta_cdf(theta_quantile(p)) - p) < 1e-9);
  }
}

TEST_CASE("phi law") {
  CHECK(phi_cdf(pi / 4) == doctest::Approx(0.5));
  CHECK(phi_cdf(0.0) == 0.0);
  CHECK(phi_cdf(pi / 2) == doctest::Approx(1.0));
  const double a = std::sqrt(0.5), b = std::sqrt(std::sqrt(3.0) / 2.0);
  CHECK(phi_cdf(pi / 6) == doctest::Approx(a / (a + b)).epsilon(1e-14));
  CHECK(phi_cdf(pi / 6) == doctest::Approx(0.431765).epsilon(1e-5));
  CHECK_THROWS_AS(phi_cdf(-0.01), Error);
  CHECK_THROWS_AS(phi_cdf(1.6), Error);
  double prev = 0.0;
  for (int k = 1; k < 1000; ++k) {
    const double x = (pi / 2) * k / 1000.0;
    const double c = phi_cdf(x);
    CHECK(c > prev);
    prev = c;
    const double h = 1e-7;
    CHECK(phi_density(x) == doctest::Approx((phi_cdf(x + h) - phi_cdf(x - h)) / (2 * h)).epsilon(1e-5));
    CHECK(std::abs(phi_cdf(phi_quantile(k / 1000.0)) - k / 1000.0) < 1e-9);
  }
}

TEST_CASE("Rost parabola") {
  CHECK(rost_shape_contains(0.25, 0.25));
  CHECK(rost_shape_contains(0.0, 0.0));
  CHECK_FALSE(rost_shape_contains(0.3, 0.3));
  CHECK(rost_boundary_v(0.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(rost_boundary_v(1.5), Error);
  CHECK_THROWS_AS(rost_shape_contains(-0.1, 0.0), Error);
  // boundary points x = (v+u)/2, y = (v−u)/2 satisfy √x + √y = 1
  for (int k = 0; k <= 100; ++k) {
    const double u = -1.0 + 2.0 * k / 100.0;
    const double v = rost_boundary_v(u);
    const double x = (v + u) / 2, y = (v - u) / 2;
    CHECK(std::sqrt(x) + std::sqrt(y) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rost_shape_contains(x * (1 - 1e-9), y * (1 - 1e-9)));
    CHECK_FALSE(rost_shape_contains(x + 1e-6, y + 1e-6));
  }
}

TEST_CASE("law tables satisfy the distribution invariants") {
  for (const auto& name : law_names()) {
    const auto law = law_by_name(name);
    REQUIRE(law.has_value());
    CHECK(law->name == name);
    if (name == "omega_star") continue;
    CHECK(law->cdf(law->lo) == doctest::Approx(0.0));
    CHECK(law->cdf(law->hi) == doctest::Approx(1.0));
    double prev = 0.0;
    for (int k = 1; k < 1000; ++k) {
      const double x = law->lo + (law->hi - law->lo) * k / 1000.0;
      const double c = law->cdf(x);
      CHECK(c >= prev);
      prev = c;
      const double p = k / 1000.0;
      CHECK(std::abs(law->cdf(law->quantile(p)) - p) < 1e-9);
    }
  }
  CHECK_FALSE(law_by_name("cauchy").has_value());
}
