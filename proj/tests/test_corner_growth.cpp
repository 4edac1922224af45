#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>

#include "tabdyn/corner_growth.hpp"
#include "tabdyn/jdt.hpp"
#include "tabdyn/stats.hpp"

using namespace tabdyn;

namespace {

using Weights = std::vector<std::vector<double>>;

Weights random_weights(int m, Rng& rng) {
  Weights w(m, std::vector<double>(m));
  for (auto& r : w)
    for (double& x : r) x = rng.exponential();
  return w;
}

// Continuous-time TASEP with a second-class particle at the origin:
// particles (1) at m < 0, holes (0) at m > 0. Moves at rate 1 each:
// 1 0 → 0 1, 1 2 → 2 1, 2 0 → 0 2. Returns the position at time t.
int gillespie_second_class(double t, Rng& rng) {
  const int L = 80;
  std::vector<int> s(2 * L + 1, 0);
  for (int m = -L; m < 0; ++m) s[m + L] = 1;
  s[L] = 2;
  double now = 0.0;
  std::vector<int> moves;
  for (;;) {
    moves.clear();
    for (int k = 0; k + 1 < static_cast<int>(s.size()); ++k) {
      const int a = s[k], b = s[k + 1];
      if ((a == 1 && b != 1) || (a == 2 && b == 0)) moves.push_back(k);
    }
    now += rng.exponential() / static_cast<double>(moves.size());
    if (now > t) break;
    const int k = moves[rng.below(moves.size())];
    REQUIRE(k > 0);
    REQUIRE(k + 2 < static_cast<int>(s.size()));
    std::swap(s[k], s[k + 1]);
  }
  return static_cast<int>(std::find(s.begin(), s.end(), 2) - s.begin()) - L;
}

}  // namespace

TEST_CASE("passage-time recursion and colouring") {
  Rng rng(51, 0);
  const auto w = random_weights(7, rng);
  const LastPassageGrid g(w);
  CHECK(g.width() == 7);
  CHECK(g.height() == 7);
  std::vector<std::vector<double>> G(8, std::vector<double>(8, 0.0));
  for (int j = 1; j <= 7; ++j)
    for (int i = 1; i <= 7; ++i) {
      G[i][j] = w[j - 1][i - 1] + std::max(G[i - 1][j], G[i][j - 1]);
      CHECK(g.G(i, j) == doctest::Approx(G[i][j]).epsilon(1e-14));
      CHECK(g.weight(i, j) == w[j - 1][i - 1]);
      Colour expect = Colour::None;
      if (i == 1 && j == 1)
        expect = Colour::None;
      else if (j == 1)
        expect = Colour::Red;
      else if (i == 1)
        expect = Colour::Green;
      else
        expect = G[i - 1][j] > G[i][j - 1] ? g.colour(i - 1, j) : g.colour(i, j - 1);
      CHECK(g.colour(i, j) == expect);
    }
}

TEST_CASE("box (1,1) is first and uncoloured") {
  Rng rng(52, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const CornerGrowthRun run(5, rng);
    const auto order = run.growth_order();
    CHECK(order.front() == Box{1, 1});
    CHECK(run.grid().colour(1, 1) == Colour::None);
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) CHECK(run.grid().G(i, j) >= run.grid().G(1, 1));
  }
}

TEST_CASE("m = 2: every weight ordering grows along the Young graph") {
  std::vector<int> perm = {1, 2, 3, 4};
  int count = 0;
  do {
    const Weights w = {{double(perm[0]), double(perm[1])}, {double(perm[2]), double(perm[3])}};
    const CornerGrowthRun run(w);
    const auto order = run.growth_order();
    CHECK(order.size() == 4);
    CHECK_NOTHROW(tableau_from_boxes(order));
    for (std::size_t k = 1; k < order.size(); ++k)
      CHECK(run.grid().G(order[k - 1].i, order[k - 1].j) < run.grid().G(order[k].i, order[k].j));
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(count == 24);
}

TEST_CASE("certified region is a prefix of the infinite growth") {
  Rng rng(53, 0);
  for (int trial = 0; trial < 50; ++trial) {
    Rng a(53, 100 + trial);
    LastPassageGrid g(a);
    g.ensure(10, 10);
    const double h = g.certified_horizon();
    CHECK(h == doctest::Approx(std::min(g.G(10, 1), g.G(1, 10))));
    std::map<Box, double> inside;
    for (int i = 1; i <= 10; ++i)
      for (int j = 1; j <= 10; ++j)
        if (g.G(i, j) <= h) inside[{i, j}] = g.G(i, j);
    g.ensure(30, 30);
    for (int i = 1; i <= 30; ++i)
      for (int j = 1; j <= 30; ++j)
        if (g.G(i, j) <= h) CHECK(inside.contains({i, j}));
    const auto rec = CornerGrowthRun(8, rng).recording_tableau();
    CHECK(StandardTableau::from_rows(rec.rows()) == rec);
  }
}

TEST_CASE("competition interface: colour boundary equals the jeu de taquin path") {
  Rng rng(54, 0);
  for (int m : {1, 2, 3, 5, 10, 40}) {
    const int trials = m <= 10 ? 500 : 50;
    for (int t = 0; t < trials; ++t) {
      const CornerGrowthRun run(m, rng);
      const auto a = interface_by_colour(run);
      const auto b = interface_by_jdt(run);
      CHECK(a.boxes == b.boxes);
      CHECK(a.boxes.front() == Box{1, 1});
    }
  }
}

TEST_CASE("followed interface is a prefix-consistent lattice path") {
  Rng a(55, 0), b(55, 0);
  LastPassageGrid ga(a), gb(b);
  const auto p = follow_interface(ga, 200);
  const auto q = follow_interface(gb, 50);
  CHECK(p.size() == 201);
  CHECK(std::equal(q.begin(), q.end(), p.begin()));
  for (std::size_t k = 1; k < p.size(); ++k) {
    const int di = p[k].i - p[k - 1].i, dj = p[k].j - p[k - 1].j;
    CHECK(((di == 1 && dj == 0) || (di == 0 && dj == 1)));
  }
}

TEST_CASE("passage times are monotone in the weights") {
  Rng rng(56, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = random_weights(8, rng);
    auto w2 = w;
    for (auto& r : w2)
      for (double& x : r) x += rng.uniform() < 0.3 ? rng.exponential() : 0.0;
    const LastPassageGrid g(w), g2(w2);
    for (int i = 1; i <= 8; ++i)
      for (int j = 1; j <= 8; ++j) CHECK(g2.G(i, j) >= g.G(i, j));
  }
}

TEST_CASE("TASEP second-class trajectory") {
  Rng rng(57, 0);
  LastPassageGrid g(rng);
  const auto events = tasep_second_class_trajectory(g, 50.0);
  REQUIRE(events.size() > 1);
  CHECK(events.front().time == 0.0);
  CHECK(events.front().x == 0);
  int x = 0;
  double last = 0.0;
  for (const auto& e : std::span(events).subspan(1)) {
    CHECK(std::abs(e.x - x) == 1);
    CHECK(e.time > last);
    CHECK(e.time <= 50.0);
    x = e.x;
    last = e.time;
  }
  CHECK(tasep_second_class(g, 50.0) == x);
  CHECK(tasep_second_class(g, 0.0) == 0);
}

TEST_CASE("TASEP extraction matches an event-driven simulation") {
  const double t = 3.0;
  const int trials = 20000;
  std::map<int, long> fa, fb;
  Rng oracle(58, 1);
  for (int k = 0; k < trials; ++k) {
    Rng r(58, 1000 + static_cast<std::uint64_t>(k));
    LastPassageGrid g(r);
    ++fa[tasep_second_class(g, t)];
    ++fb[gillespie_second_class(t, oracle)];
  }
  std::vector<long> a, b;
  for (int x = -20; x <= 20; ++x) {
    if (fa[x] + fb[x] == 0) continue;
    a.push_back(fa[x]);
    b.push_back(fb[x]);
  }
  CHECK(chi_square_two_sample(a, b).p_value > 0.001);
}

TEST_CASE("Rost limit shape distance shrinks") {
  Rng rng(59, 0);
  LastPassageGrid g(rng);
  CHECK(rost_hausdorff_distance(g, 400.0) < 0.1);
}

TEST_CASE("fixed-weight grids cannot be extended") {
  const Weights w = {{1.0}};
  LastPassageGrid g(w);
  CHECK_THROWS_AS(g.add_column(), std::logic_error);
}
