#pragma once

// Corner growth as last-passage percolation with Exp(1) weights, its
// two-colour competition and the competition interface.

#include <cstdint>
#include <vector>

#include "tabdyn/diagram.hpp"
#include "tabdyn/jdt.hpp"
#include "tabdyn/rng.hpp"

namespace tabdyn {

enum class Colour : std::uint8_t { None, Red, Green };

/// Passage times G(i, j) = w(i, j) + max(G(i−1, j), G(i, j−1)) on a
/// rectangle [1, width] × [1, height] that can be extended by whole columns
/// or rows. Weights are drawn from the generator in extension order, so a
/// grid is a pure function of the stream and the extension sequence.
class LastPassageGrid {
 public:
  /// Empty grid drawing weights from rng (which must outlive the grid).
  explicit LastPassageGrid(Rng& rng) : rng_(&rng) {}
  /// Grid with fixed weights; weights[j-1][i-1] = w(i, j). Cannot be extended.
  explicit LastPassageGrid(const std::vector<std::vector<double>>& weights);

  void add_column();
  void add_row();
  /// Extends until the grid covers [1, w] × [1, h].
  void ensure(int w, int h);

  [[nodiscard]] int width() const noexcept { return width_; }
  [[nodiscard]] int height() const noexcept { return height_; }
  [[nodiscard]] bool contains(Box b) const noexcept {
    return b.i >= 1 && b.j >= 1 && b.i <= width_ && b.j <= height_;
  }
  /// G(i, j); zero when i or j is below 1. Precondition: contains or below.
  [[nodiscard]] double G(int i, int j) const noexcept {
    if (i < 1 || j < 1) return 0.0;
    return g_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  [[nodiscard]] double weight(int i, int j) const noexcept {
    return w_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  /// Row 1 red, column 1 green, (1,1) uncoloured, otherwise the colour of
  /// the later-infected neighbour.
  [[nodiscard]] Colour colour(int i, int j) const noexcept {
    return c_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  /// Largest t such that {G ≤ t} ∩ grid is the true growth region at time t.
  [[nodiscard]] double certified_horizon() const noexcept;
  /// Extends the grid until the region {G ≤ t} is certified.
  void cover_time(double t);
  /// Forgets the generator; later extensions throw std::logic_error.
  void detach() noexcept { rng_ = nullptr; }

 private:
  void fill(int i, int j, double w);

  Rng* rng_ = nullptr;
  int width_ = 0;
  int height_ = 0;
  std::vector<std::vector<double>> w_;  // by column
  std::vector<std::vector<double>> g_;
  std::vector<std::vector<Colour>> c_;
};

/// A finished run on an m × m box (or fixed weights).
class CornerGrowthRun {
 public:
  CornerGrowthRun(int m, Rng& rng);
  explicit CornerGrowthRun(const std::vector<std::vector<double>>& weights);

  [[nodiscard]] const LastPassageGrid& grid() const noexcept { return grid_; }
  [[nodiscard]] double horizon() const noexcept { return grid_.certified_horizon(); }
  /// Boxes of the box ordered by G.
  [[nodiscard]] std::vector<Box> growth_order() const;
  /// Boxes with G ≤ horizon ordered by G: a prefix of the infinite growth.
  [[nodiscard]] std::vector<Box> certified_order() const;
  [[nodiscard]] StandardTableau recording_tableau() const {
    return tableau_from_boxes(certified_order());
  }

 private:
  LastPassageGrid grid_;
};

/// Competition interface inside the certified region, traced along the
/// green/red boundary. Throws std::logic_error if the colouring around the
/// path breaks the green-above / red-below invariant.
LatticePath interface_by_colour(const CornerGrowthRun& run);
/// Undetermined-mode jeu de taquin path of the recording tableau.
LatticePath interface_by_jdt(const CornerGrowthRun& run);

/// Follows the interface on an extensible grid for `steps` steps past (1,1).
std::vector<Box> follow_interface(LastPassageGrid& grid, int steps);

/// Second-class particle position X(t) in TASEP from step initial data, with
/// time measured from the creation of the *-pair at G(1,1): the content of
/// the last interface box with G − G(1,1) ≤ t.
int tasep_second_class(LastPassageGrid& grid, double t);

struct TaseEvent {
  double time;
  int x;
};
/// (time, X) after every move of the second-class particle up to time t.
std::vector<TaseEvent> tasep_second_class_trajectory(LastPassageGrid& grid, double t);

/// Hausdorff distance between {G ≤ t}/t and {√x + √y ≤ 1}.
double rost_hausdorff_distance(LastPassageGrid& grid, double t);

}  // namespace tabdyn
