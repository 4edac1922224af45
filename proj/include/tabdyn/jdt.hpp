#pragma once

// Jeu de taquin on standard tableaux and their finite truncations.

#include <cstdint>
#include <vector>

#include "tabdyn/diagram.hpp"

namespace tabdyn {

/// Up-right box sequence starting at (1,1).
struct LatticePath {
  std::vector<Box> boxes;
  /// Set when the path stopped because the truncation does not determine
  /// the next step of the infinite path.
  bool undetermined_tail = false;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// How entries outside the tableau compare while tracing the path.
enum class Missing {
  Infinity,      ///< finite jeu de taquin: outside entries are +∞
  Undetermined,  ///< the tableau is a truncation; report only the certified prefix
};

struct SlideResult {
  StandardTableau tableau;
  LatticePath path;
};

/// The slide j: empty (1,1), slide along the path, subtract 1.
/// Throws EmptyTableau.
SlideResult jdt_slide(const StandardTableau& t);
/// Inverse slide: the unique t of shape nu with jdt_slide(t).tableau == s.
/// Throws NotACover unless shape(s) ↗ nu.
StandardTableau jdt_inverse(const StandardTableau& s, const YoungDiagram& nu);

/// J on a truncation. Throws EmptyTableau.
StandardTableau apply_J(const StandardTableau& t);
/// In-place J; `path` receives the slide path and keeps its allocation.
void apply_J_in_place(StandardTableau& t, std::vector<Box>& path);

/// Jeu de taquin path of t read as the prefix of an infinite tableau.
LatticePath infinite_path_prefix(const StandardTableau& t, Missing mode);

/// Lazy path q_1..q_n with q_n the end of the finite path of the size-n
/// truncation; jumped[k] tells whether q_{k+1} differs from q_k.
struct NaturalParamPath {
  std::vector<Box> q;
  std::vector<bool> jumped;
};

/// Streaming form of the natural parametrization: feed the growth boxes
/// d_1, d_2, ... in order.
class NaturalParamTracker {
 public:
  /// Returns true if the path advanced to d.
  bool push(Box d) noexcept {
    ++count_;
    if (count_ == 1) {
      q_ = d;
      return true;
    }
    if ((d.i == q_.i + 1 && d.j == q_.j) || (d.i == q_.i && d.j == q_.j + 1)) {
      q_ = d;
      ++jumps_;
      return true;
    }
    return false;
  }
  [[nodiscard]] Box current() const noexcept { return q_; }
  [[nodiscard]] std::int64_t count() const noexcept { return count_; }
  /// Number of path steps taken after (1,1).
  [[nodiscard]] std::int64_t jumps() const noexcept { return jumps_; }

 private:
  Box q_{1, 1};
  std::int64_t count_ = 0;
  std::int64_t jumps_ = 0;
};

NaturalParamPath natural_param(const StandardTableau& t);

/// atan2(j - 1, i - 1) of the last natural-parametrization box of J^{k-1}(t).
/// Throws Exhausted if fewer than min_entries entries remain after the k-1
/// slides, DomainError if k < 1.
double estimate_angle(const StandardTableau& t, int k, std::int64_t min_entries = 2);
/// Angle of a box seen from (1,1).
double box_angle(Box b) noexcept;

}  // namespace tabdyn
