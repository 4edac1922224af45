#include "tabdyn/plancherel.hpp"

#include <algorithm>
#include <cmath>

#include "tabdyn/error.hpp"
#include "tabdyn/rsk.hpp"

namespace tabdyn {

YoungDiagram GrowthTrace::shape() const {
  std::vector<int> rows;
  for (const Box b : boxes) {
    if (b.j > static_cast<int>(rows.size())) rows.push_back(0);
    ++rows[b.j - 1];
  }
  return YoungDiagram(std::move(rows));
}

GrowthTrace sample_growth_rsk(std::int64_t n, Rng& rng) {
  GrowthTrace trace;
  trace.seed = rng.seed();
  trace.stream = rng.stream_id();
  trace.boxes.reserve(static_cast<std::size_t>(std::max<std::int64_t>(0, n)));
  StreamingRecorder rec;
  for (std::int64_t k = 0; k < n; ++k) trace.boxes.push_back(rec.push(rng.uniform()));
  return trace;
}

namespace {

// Mutable diagram with row lengths and column heights, for the Markov
// sampler. Hook of (i, j): rows[j-1] - i + cols[i-1] - j + 1.
struct GrowingShape {
  std::vector<int> rows;
  std::vector<int> cols;

  int hook(int i, int j) const noexcept { return rows[j - 1] - i + cols[i - 1] - j + 1; }

  // ln of f^ν / ((n+1) f^λ) for adding the addable box (i, j): hooks of the
  // boxes left of it in row j and below it in column i grow by one.
  double log_ratio(int i, int j) const noexcept {
    double s = 0.0;
    for (int a = 1; a < i; ++a) {
      const int h = hook(a, j);
      s += std::log(static_cast<double>(h) / (h + 1));
    }
    for (int b = 1; b < j; ++b) {
      const int h = hook(i, b);
      s += std::log(static_cast<double>(h) / (h + 1));
    }
    return s;
  }

  std::vector<Box> addable() const {
    std::vector<Box> out;
    const int k = static_cast<int>(rows.size());
    for (int j = 1; j <= k + 1; ++j) {
      const int len = j <= k ? rows[j - 1] : 0;
      if (j == 1 || rows[j - 2] > len) out.push_back({len + 1, j});
    }
    return out;
  }

  void add(Box b) {
    if (b.j > static_cast<int>(rows.size())) rows.push_back(0);
    ++rows[b.j - 1];
    if (b.i > static_cast<int>(cols.size())) cols.push_back(0);
    ++cols[b.i - 1];
  }
};

}  // namespace

GrowthTrace sample_growth_markov(std::int64_t n, Rng& rng) {
  GrowthTrace trace;
  trace.seed = rng.seed();
  trace.stream = rng.stream_id();
  trace.boxes.reserve(static_cast<std::size_t>(std::max<std::int64_t>(0, n)));
  GrowingShape shape;
  std::vector<double> weights;
  for (std::int64_t step = 0; step < n; ++step) {
    const auto candidates = shape.addable();
    weights.clear();
    double total = 0.0;
    for (const Box b : candidates) {
      weights.push_back(std::exp(shape.log_ratio(b.i, b.j)));
      total += weights.back();
    }
    // the weights sum to 1 up to rounding; normalise by the computed total
    double target = rng.uniform() * total;
    std::size_t pick = 0;
    while (pick + 1 < candidates.size() && target >= weights[pick]) {
      target -= weights[pick];
      ++pick;
    }
    shape.add(candidates[pick]);
    trace.boxes.push_back(candidates[pick]);
  }
  return trace;
}

std::vector<Transition> transition_probs(const YoungDiagram& lambda) {
  std::vector<Transition> out;
  const BigInt base = count_syt(lambda) * (lambda.size() + 1);
  for (const Box b : lambda.addable_boxes()) {
    YoungDiagram nu = lambda.with_box(b);
    BigRational p(count_syt(nu), base);
    out.push_back({b, std::move(nu), std::move(p)});
  }
  return out;
}

std::vector<TransitionF> transition_probs_float(const YoungDiagram& lambda) {
  GrowingShape shape;
  shape.rows = lambda.rows();
  for (int i = 1; i <= lambda.first_row(); ++i) shape.cols.push_back(lambda.column_height(i));
  std::vector<TransitionF> out;
  for (const Box b : shape.addable()) out.push_back({b, std::exp(shape.log_ratio(b.i, b.j))});
  return out;
}

std::vector<PlancherelEntry> exact_plancherel(int n) {
  if (n > 8) throw Error(Errc::NTooLarge, "exact Plancherel tables stop at n = 8");
  std::vector<PlancherelEntry> out;
  const BigInt nf = factorial(n);
  for (auto& lambda : partitions_of(n)) {
    const BigInt f = count_syt(lambda);
    out.push_back({std::move(lambda), BigRational(f * f, nf)});
  }
  return out;
}

BigRational cylinder_probability(const StandardTableau& s) {
  return BigRational(count_syt(s.shape()), factorial(static_cast<int>(s.size())));
}

BigRational path_probability(const StandardTableau& s) {
  BigRational p = 1;
  YoungDiagram current;
  for (const Box b : s.boxes_in_order()) {
    const YoungDiagram next = current.with_box(b);
    p *= BigRational(count_syt(next), count_syt(current) * (current.size() + 1));
    current = next;
  }
  return p;
}

PieriSample pieri_growth(std::int64_t n, int k, Rng& rng) {
  if (n < 1 || k < 1) throw Error(Errc::DomainError, "Pieri growth needs n, k >= 1");
  StreamingRecorder rec;
  for (std::int64_t a = 0; a < n; ++a) rec.push(rng.uniform());
  std::vector<double> b(static_cast<std::size_t>(k));
  for (double& x : b) x = rng.uniform();
  std::sort(b.begin(), b.end());
  PieriSample out;
  out.n = n;
  out.k = k;
  for (double x : b) {
    const Box box = rec.push(x);
    out.boxes.push_back(box);
    out.u_coords.push_back(content(box));
  }
  return out;
}

int default_pieri_k(std::int64_t n) noexcept {
  int k = static_cast<int>(std::ceil(std::pow(static_cast<double>(n), 0.25)));
  // guard against pow rounding just above an exact fourth power
  while (k > 1 && static_cast<std::int64_t>(k - 1) * (k - 1) * (k - 1) * (k - 1) >= n) --k;
  while (static_cast<std::int64_t>(k) * k * k * k < n) ++k;
  return std::max(1, k);
}

}  // namespace tabdyn
