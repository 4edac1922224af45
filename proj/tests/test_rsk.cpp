#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tabdyn/error.hpp"
#include "tabdyn/rng.hpp"
#include "tabdyn/rsk.hpp"

using namespace tabdyn;

namespace {

// Patience sorting: number of piles equals the longest increasing subsequence.
int lis_length(const std::vector<double>& xs) {
  std::vector<double> tops;
  for (double x : xs) {
    auto it = std::lower_bound(tops.begin(), tops.end(), x);
    if (it == tops.end()) {
      tops.push_back(x);
    } else {
      *it = x;
    }
  }
  return static_cast<int>(tops.size());
}

std::vector<double> random_distinct(Rng& rng, int n) {
  std::vector<double> xs(n);
  for (double& x : xs) x = rng.uniform();
  return xs;
}

// (x1, y1) ⪯ (x2, y2) iff x1 <= x2 and y1 >= y2.
bool weakly_left(Box a, Box b) { return a.i <= b.i && a.j >= b.j; }
bool strictly_left(Box a, Box b) { return weakly_left(a, b) && a != b; }

std::vector<double> cat(std::vector<double> a, std::initializer_list<double> tail) {
  a.insert(a.end(), tail);
  return a;
}

}  // namespace

TEST_CASE("row insertion examples") {
  RealTableau p;
  CHECK(p.insert(0.3) == Box{1, 1});
  CHECK(p.insert(0.1) == Box{1, 2});
  CHECK(p.insert(0.2) == Box{2, 1});
  CHECK(p.rows() == std::vector<std::vector<double>>{{0.1, 0.2}, {0.3}});
  CHECK(p.is_increasing());
  const std::vector<double> inc = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  RealTableau q;
  for (std::size_t k = 0; k < inc.size(); ++k) CHECK(q.insert(inc[k]) == Box{int(k) + 1, 1});
}

TEST_CASE("duplicates and non-finite values are rejected") {
  RealTableau p;
  p.insert(1.0);
  p.insert(3.0);
  p.insert(2.0);  // rows [1,2],[3]
  CHECK_THROWS_AS(p.insert(3.0), Error);
  CHECK_THROWS_AS(p.insert(2.0), Error);
  CHECK_THROWS_AS(static_cast<void>(p.probe(3.0)), Error);
  try {
    p.insert(3.0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateEntry);
  }
  RealTableau z;
  z.insert(0.0);
  CHECK_THROWS_AS(z.insert(-0.0), Error);
  CHECK_THROWS_AS(z.insert(std::numeric_limits<double>::quiet_NaN()), Error);
  CHECK_THROWS_AS(z.insert(std::numeric_limits<double>::infinity()), Error);
}

TEST_CASE("distinct set survives growth") {
  DistinctReals s;
  for (int k = 0; k < 10000; ++k) CHECK(s.insert(k * 0.5));
  for (int k = 0; k < 10000; ++k) CHECK_FALSE(s.insert(k * 0.5));
  CHECK(s.contains(0.5));
  CHECK_FALSE(s.contains(0.25));
  CHECK(s.size() == 10000);
}

TEST_CASE("probe agrees with insert") {
  Rng rng(3, 0);
  RealTableau p;
  for (int k = 0; k < 2000; ++k) {
    const double x = rng.uniform();
    const Box expected = p.probe(x);
    CHECK(p.insert(x) == expected);
  }
  CHECK(p.is_increasing());
}

TEST_CASE("rsk_finite and rec_last_box examples") {
  const std::vector<double> xs = {0.3, 0.1, 0.2};
  const auto out = rsk_finite(xs);
  CHECK(out.shape == YoungDiagram({2, 1}));
  CHECK(out.recording.rows() == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(out.insertion.shape() == out.shape);
  CHECK(rsk_finite(std::vector<double>{0.5}).recording.rows() ==
        std::vector<std::vector<int>>{{1}});
  CHECK(rec_last_box(std::vector<double>{0.1, 0.2, 0.3}) == Box{3, 1});
  CHECK(rec_last_box(std::vector<double>{0.3, 0.2, 0.1}) == Box{1, 3});
  CHECK(rec_last_box(std::vector<double>{0.7}) == Box{1, 1});
  CHECK_THROWS_AS(rec_last_box(std::vector<double>{}), Error);
  CHECK_THROWS_AS(rsk_finite(std::vector<double>{0.2, 0.2}), Error);
}

TEST_CASE("streaming recorder matches rsk_finite") {
  StreamingRecorder rec;
  CHECK(rec.push(0.3) == Box{1, 1});
  CHECK(rec.push(0.1) == Box{1, 2});
  CHECK(rec.push(0.2) == Box{2, 1});
  Rng rng(11, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto xs = random_distinct(rng, 60);
    StreamingRecorder r;
    std::vector<Box> boxes;
    for (double x : xs) boxes.push_back(r.push(x));
    const auto out = rsk_finite(xs);
    CHECK(tableau_from_boxes(boxes) == out.recording);
    CHECK(path_from_tableau(out.recording).back() == out.shape);
  }
}

TEST_CASE("Q-shape counts over S_4 follow f^λ") {
  std::vector<double> xs = {1, 2, 3, 4};
  std::map<std::vector<int>, int> counts;
  do {
    ++counts[rsk_finite(xs).shape.rows()];
  } while (std::next_permutation(xs.begin(), xs.end()));
  for (const auto& lambda : partitions_of(4)) {
    const long f = static_cast<long>(count_syt(lambda));
    CHECK(counts[lambda.rows()] == f * f);
  }
}

TEST_CASE("RSK is a bijection onto pairs of tableaux") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<double> xs(n);
    std::iota(xs.begin(), xs.end(), 1.0);
    std::set<std::pair<std::vector<std::vector<double>>, StandardTableau>> seen;
    std::set<YoungDiagram> shapes;
    long total = 0;
    do {
      const auto out = rsk_finite(xs);
      CHECK(out.insertion.is_increasing());
      seen.insert({out.insertion.rows(), out.recording});
      shapes.insert(out.shape);
      ++total;
    } while (std::next_permutation(xs.begin(), xs.end()));
    CHECK(static_cast<long>(seen.size()) == total);
    CHECK(static_cast<BigInt>(total) == factorial(n));
    CHECK(shapes.size() == partitions_of(n).size());
  }
}

TEST_CASE("symmetries of the RSK shape") {
  auto check = [](std::vector<double> xs) {
    const auto base = rsk_finite(xs).shape;
    std::vector<double> rev(xs.rbegin(), xs.rend());
    std::vector<double> flip, both;
    for (double x : xs) flip.push_back(1.0 - x);
    for (double x : rev) both.push_back(1.0 - x);
    CHECK(rsk_finite(rev).shape == base.transpose());
    CHECK(rsk_finite(flip).shape == base.transpose());
    CHECK(rsk_finite(both).shape == base);
  };
  for (int n = 1; n <= 6; ++n) {
    std::vector<double> xs(n);
    for (int k = 0; k < n; ++k) xs[k] = (k + 1) / 8.0;
    do {
      check(xs);
    } while (std::next_permutation(xs.begin(), xs.end()));
  }
  Rng rng(17, 0);
  for (int trial = 0; trial < 100; ++trial) {
    check(random_distinct(rng, 1 + static_cast<int>(rng.below(200))));
  }
}

TEST_CASE("first row length is the longest increasing subsequence") {
  Rng rng(23, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto xs = random_distinct(rng, 1 + static_cast<int>(rng.below(200)));
    CHECK(rsk_finite(xs).shape.first_row() == lis_length(xs));
  }
}

TEST_CASE("row bumping monotonicity") {
  // Rec(a b) ≺ Rec(a b b'), Rec(a b') ≻ Rec(a b' b), Rec(a b) ⪯ Rec(a b'),
  // Rec(a b') ⪯ Rec(a b b') for b < b'.
  Rng rng(29, 0);
  int counterexamples[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 5000; ++trial) {
    const auto a = random_distinct(rng, static_cast<int>(rng.below(7)));
    double b = rng.uniform(), bp = rng.uniform();
    if (b > bp) std::swap(b, bp);
    const Box ab = rec_last_box(cat(a, {b}));
    const Box abp = rec_last_box(cat(a, {bp}));
    const Box abbp = rec_last_box(cat(a, {b, bp}));
    const Box abpb = rec_last_box(cat(a, {bp, b}));
    counterexamples[0] += !strictly_left(ab, abbp);
    counterexamples[1] += !strictly_left(abpb, abp);
    counterexamples[2] += !weakly_left(ab, abp);
    counterexamples[3] += !weakly_left(abp, abbp);
    // the classical form of (a) and (b): strict in the column, resp. the row
    CHECK(ab.i < abbp.i);
    CHECK(abpb.j > abp.j);
  }
  for (int part = 0; part < 4; ++part) {
    INFO("part " << part << " counterexamples: " << counterexamples[part]);
    CHECK(counterexamples[part] == 0);
  }
}
