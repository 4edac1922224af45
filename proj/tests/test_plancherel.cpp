#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "tabdyn/error.hpp"
#include "tabdyn/jdt.hpp"
#include "tabdyn/plancherel.hpp"
#include "tabdyn/stats.hpp"

using namespace tabdyn;

namespace {

BigRational q(long a, long b) { return BigRational(a) / BigRational(b); }

std::map<YoungDiagram, BigRational> as_map(const std::vector<Transition>& ts) {
  std::map<YoungDiagram, BigRational> m;
  for (const auto& t : ts) {
    CHECK(t.next == YoungDiagram(t.next));
    m[t.next] = t.probability;
  }
  return m;
}

// f^λ / n! for the shape of s
BigRational plancherel_cylinder_oracle(const YoungDiagram& shape) {
  return BigRational(count_syt(shape)) / BigRational(factorial(static_cast<int>(shape.size())));
}

}  // namespace

TEST_CASE("transition probability examples") {
  auto a = as_map(transition_probs(YoungDiagram({1})));
  CHECK(a.size() == 2);
  CHECK(a[YoungDiagram({2})] == q(1, 2));
  CHECK(a[YoungDiagram({1, 1})] == q(1, 2));
  auto b = as_map(transition_probs(YoungDiagram({2, 1})));
  CHECK(b.size() == 3);
  CHECK(b[YoungDiagram({3, 1})] == q(3, 8));
  CHECK(b[YoungDiagram({2, 2})] == q(2, 8));
  CHECK(b[YoungDiagram({2, 1, 1})] == q(3, 8));
  auto c = transition_probs(YoungDiagram{});
  REQUIRE(c.size() == 1);
  CHECK(c[0].next == YoungDiagram({1}));
  CHECK(c[0].box == Box{1, 1});
  CHECK(c[0].probability == 1);
}

TEST_CASE("transition probabilities sum to one") {
  for (int n = 0; n <= 12; ++n)
    for (const auto& lambda : partitions_of(n)) {
      BigRational sum = 0;
      const auto exact = transition_probs(lambda);
      const auto fl = transition_probs_float(lambda);
      REQUIRE(exact.size() == fl.size());
      double fsum = 0.0;
      for (std::size_t k = 0; k < exact.size(); ++k) {
        sum += exact[k].probability;
        fsum += fl[k].probability;
        CHECK(exact[k].box == fl[k].box);
        CHECK(exact[k].next == lambda.with_box(exact[k].box));
        CHECK(std::abs(fl[k].probability - exact[k].probability.convert_to<double>()) < 1e-12);
        CHECK(exact[k].probability ==
              BigRational(count_syt(exact[k].next)) / BigRational(count_syt(lambda) * (n + 1)));
      }
      CHECK(sum == 1);
      CHECK(std::abs(fsum - 1.0) < 1e-12);
    }
}

TEST_CASE("exact Plancherel measure") {
  const auto p4 = exact_plancherel(4);
  std::map<YoungDiagram, BigRational> m;
  for (const auto& e : p4) m[e.shape] = e.probability;
  CHECK(m.size() == 5);
  CHECK(m[YoungDiagram({4})] == q(1, 24));
  CHECK(m[YoungDiagram({3, 1})] == q(9, 24));
  CHECK(m[YoungDiagram({2, 2})] == q(4, 24));
  CHECK(m[YoungDiagram({2, 1, 1})] == q(9, 24));
  CHECK(m[YoungDiagram({1, 1, 1, 1})] == q(1, 24));
  const auto p1 = exact_plancherel(1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].probability == 1);
  const auto p0 = exact_plancherel(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].shape.empty());
  CHECK(p0[0].probability == 1);
  for (int n = 0; n <= 8; ++n) {
    BigRational sum = 0;
    for (const auto& e : exact_plancherel(n)) sum += e.probability;
    CHECK(sum == 1);
  }
  CHECK_THROWS_AS(exact_plancherel(9), Error);
}

TEST_CASE("cylinder probabilities telescope along the Markov chain") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& s : all_standard_tableaux(lambda)) {
        CHECK(cylinder_probability(s) == plancherel_cylinder_oracle(lambda));
        CHECK(path_probability(s) == cylinder_probability(s));
      }
}

TEST_CASE("J preserves the Plancherel measure on cylinders of size 4") {
  std::map<StandardTableau, BigRational> pushed;
  BigRational total = 0;
  for (const auto& lambda : partitions_of(5))
    for (const auto& t : all_standard_tableaux(lambda)) {
      const auto w = cylinder_probability(t);
      pushed[apply_J(t)] += w;
      total += w;
    }
  CHECK(total == 1);
  std::size_t count = 0;
  for (const auto& mu : partitions_of(4))
    for (const auto& s : all_standard_tableaux(mu)) {
      ++count;
      CHECK(pushed[s] == plancherel_cylinder_oracle(mu));
    }
  CHECK(pushed.size() == count);
}

TEST_CASE("sampler traces are valid growth paths") {
  Rng rng(3, 0);
  for (int trial = 0; trial < 50; ++trial) {
    for (const auto& trace : {sample_growth_rsk(200, rng), sample_growth_markov(200, rng)}) {
      CHECK(trace.size() == 200);
      const auto t = trace.tableau();
      CHECK(StandardTableau::from_rows(t.rows()) == t);
      CHECK(t.boxes_in_order() == trace.boxes);
      CHECK(trace.shape() == t.shape());
    }
  }
  CHECK(sample_growth_rsk(0, rng).size() == 0);
  CHECK(sample_growth_markov(0, rng).size() == 0);
  Rng r2(11, 4);
  const auto tr = sample_growth_rsk(3, r2);
  CHECK(tr.seed == 11);
  CHECK(tr.stream == 4);
}

TEST_CASE("second box is symmetric under the RSK sampler") {
  Rng rng(21, 0);
  const int trials = 100000;
  int right = 0;
  for (int t = 0; t < trials; ++t)
    if (sample_growth_rsk(2, rng).boxes[1] == Box{2, 1}) ++right;
  CHECK(std::abs(right - trials / 2.0) < 3.0 * std::sqrt(trials * 0.25));
}

TEST_CASE("Markov sampler matches the exact measure at n = 4") {
  Rng rng(22, 0);
  const int trials = 100000;
  std::map<YoungDiagram, int> freq;
  for (int t = 0; t < trials; ++t) ++freq[sample_growth_markov(4, rng).shape()];
  double tv = 0.0;
  for (const auto& e : exact_plancherel(4))
    tv += std::abs(freq[e.shape] / double(trials) - e.probability.convert_to<double>());
  CHECK(tv / 2 < 0.01);
}

TEST_CASE("both samplers agree on shape marginals at n = 6") {
  Rng ra(23, 0), rb(23, 1);
  const int trials = 20000;
  std::map<YoungDiagram, long> fa, fb;
  for (int t = 0; t < trials; ++t) {
    ++fa[sample_growth_rsk(6, ra).shape()];
    ++fb[sample_growth_markov(6, rb).shape()];
  }
  std::vector<long> a, b;
  for (const auto& mu : partitions_of(6)) {
    a.push_back(fa[mu]);
    b.push_back(fb[mu]);
  }
  CHECK(chi_square_two_sample(a, b).p_value > 0.001);
}

TEST_CASE("Pieri growth adds a horizontal strip") {
  Rng rng(24, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = 1 + static_cast<std::int64_t>(rng.below(500));
    const int k = 1 + static_cast<int>(rng.below(20));
    const auto s = pieri_growth(n, k, rng);
    CHECK(s.n == n);
    CHECK(s.k == k);
    REQUIRE(s.u_coords.size() == static_cast<std::size_t>(k));
    std::set<int> cols;
    for (std::size_t l = 0; l < s.boxes.size(); ++l) {
      cols.insert(s.boxes[l].i);
      CHECK(s.u_coords[l] == content(s.boxes[l]));
      if (l > 0) CHECK(s.boxes[l].i > s.boxes[l - 1].i);
    }
    CHECK(cols.size() == s.boxes.size());
  }
  CHECK_THROWS_AS(pieri_growth(0, 1, rng), Error);
  CHECK_THROWS_AS(pieri_growth(1, 0, rng), Error);
}

TEST_CASE("Pieri growth with one box is the next growth step") {
  for (std::uint64_t stream = 0; stream < 200; ++stream) {
    Rng a(25, stream), b(25, stream);
    const auto n = 1 + static_cast<std::int64_t>(stream);
    const auto s = pieri_growth(n, 1, a);
    CHECK(s.boxes[0] == sample_growth_rsk(n + 1, b).boxes.back());
  }
  Rng rng(26, 0);
  int plus = 0;
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) {
    const int u = pieri_growth(1, 1, rng).u_coords[0];
    CHECK((u == 1 || u == -1));
    plus += u == 1;
  }
  CHECK(std::abs(plus - trials / 2.0) < 3.0 * std::sqrt(trials * 0.25));
}

TEST_CASE("default Pieri k") {
  CHECK(default_pieri_k(1) == 1);
  CHECK(default_pieri_k(16) == 2);
  CHECK(default_pieri_k(17) == 3);
  CHECK(default_pieri_k(10000) == 10);
  CHECK(default_pieri_k(10001) == 11);
}
