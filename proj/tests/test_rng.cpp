#include <doctest.h>

#include <array>
#include <cmath>
#include <set>

#include "tabdyn/rng.hpp"

using namespace tabdyn;

// Reference outputs from numpy.random.Philox(key=...).random_raw(8).
TEST_CASE("philox stream matches reference outputs") {
  const std::array<std::uint64_t, 8> zero_key = {
      0x02f4ba6408e4d89bULL, 0x3dd62b0b9ca8c5b2ULL, 0x1c8667a55d902e79ULL,
      0x907d7a052fd5b4dcULL, 0x809bf322883987c3ULL, 0x471128b9e807f7ddULL,
      0xf250ba0dbec065b7ULL, 0xfc6ed66767a457bcULL};
  Rng a(0, 0);
  for (auto expected : zero_key) CHECK(a() == expected);

  const std::array<std::uint64_t, 8> pi_key = {
      0xd96148ed4eef3177ULL, 0x3756c9977974e2e4ULL, 0xaca97084472822a9ULL,
      0xf84393111bc816fcULL, 0xafeacafa58106bc2ULL, 0x8ceec2cd5d66be03ULL,
      0xf35d32a580766947ULL, 0x71552ce89be91f93ULL};
  Rng b(0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL);
  for (auto expected : pi_key) CHECK(b() == expected);

  const std::array<std::uint64_t, 4> small_key = {
      0x7b6cc7b1862cc5f2ULL, 0xb960f2ea4b3f8d9fULL, 0x0cdd72e015deb1a6ULL,
      0x50edb0d22a6a6fd5ULL};
  Rng c(7, 3);
  for (auto expected : small_key) CHECK(c() == expected);
}

TEST_CASE("philox counter carries across words") {
  const auto block = philox4x64_10({0, 1, 0, 0}, {7, 3});
  const std::array<std::uint64_t, 4> expected = {
      0x6c658e5f4f8ef7cbULL, 0x1e3de36fcb1c988dULL, 0x4be9f4e6c96fbd20ULL,
      0xb0540310e2e5bb01ULL};
  CHECK(block == expected);
}

TEST_CASE("streams are reproducible and distinct") {
  Rng a(42, 1), b(42, 1), c(42, 2), d(43, 1);
  std::set<std::uint64_t> seen;
  for (int k = 0; k < 100; ++k) {
    const auto x = a();
    CHECK(x == b());
    seen.insert(x);
    seen.insert(c());
    seen.insert(d());
  }
  CHECK(seen.size() == 300);
}

TEST_CASE("uniform and exponential moments") {
  Rng rng(1, 0);
  const int n = 200000;
  double su = 0, se = 0, se2 = 0;
  for (int k = 0; k < n; ++k) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    su += u;
    const double e = rng.exponential();
    REQUIRE(e >= 0.0);
    se += e;
    se2 += e * e;
  }
  CHECK(su / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(se / n == doctest::Approx(1.0).epsilon(0.01));
  CHECK(se2 / n == doctest::Approx(2.0).epsilon(0.03));
}

TEST_CASE("below is unbiased on a small range") {
  Rng rng(5, 0);
  std::array<int, 6> counts{};
  const int n = 60000;
  for (int k = 0; k < n; ++k) ++counts[rng.below(6)];
  for (int c : counts) CHECK(std::abs(c - n / 6) < 5 * std::sqrt(n / 6.0));
}

TEST_CASE("trial streams separate salts") {
  CHECK(trial_stream(1, 0) != trial_stream(2, 0));
  CHECK(trial_stream(1, 5) == ((1ULL << 40) ^ 5ULL));
}
