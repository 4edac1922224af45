#pragma once

// Plancherel growth: two samplers, exact small-n tables, Pieri growth.

#include <cstdint>
#include <vector>

#include "tabdyn/diagram.hpp"
#include "tabdyn/rng.hpp"

namespace tabdyn {

/// Boxes d_1..d_n of a growth Λ_0 ↗ Λ_1 ↗ … ↗ Λ_n.
struct GrowthTrace {
  std::vector<Box> boxes;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  [[nodiscard]] std::int64_t size() const noexcept {
    return static_cast<std::int64_t>(boxes.size());
  }
  [[nodiscard]] StandardTableau tableau() const { return tableau_from_boxes(boxes); }
  [[nodiscard]] YoungDiagram shape() const;
};

/// Streaming RSK on n i.i.d. U(0,1) draws.
GrowthTrace sample_growth_rsk(std::int64_t n, Rng& rng);
/// Markov chain driven by the transition rule f^ν / ((n+1) f^λ).
GrowthTrace sample_growth_markov(std::int64_t n, Rng& rng);

struct Transition {
  Box box;
  YoungDiagram next;
  BigRational probability;
};
struct TransitionF {
  Box box;
  double probability;
};

/// Exact transition probabilities out of λ, in addable-box order.
std::vector<Transition> transition_probs(const YoungDiagram& lambda);
/// Floating-point version computed from hook ratios in log space.
std::vector<TransitionF> transition_probs_float(const YoungDiagram& lambda);

struct PlancherelEntry {
  YoungDiagram shape;
  BigRational probability;
};
/// (f^λ)²/n! for every λ ⊢ n; throws NTooLarge for n > 8.
std::vector<PlancherelEntry> exact_plancherel(int n);
/// Probability that the growth process passes through the tableau s,
/// f^λ / |λ|!.
BigRational cylinder_probability(const StandardTableau& s);
/// Product of exact transition probabilities along s.
BigRational path_probability(const StandardTableau& s);

struct PieriSample {
  std::int64_t n = 0;
  int k = 0;
  std::vector<int> u_coords;
  std::vector<Box> boxes;
};
/// RSK shape of n uniforms followed by k sorted uniforms; returns the
/// contents of the k new boxes.
PieriSample pieri_growth(std::int64_t n, int k, Rng& rng);
/// k = ⌈n^{1/4}⌉.
int default_pieri_k(std::int64_t n) noexcept;

}  // namespace tabdyn
