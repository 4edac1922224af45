#pragma once

// Rost's mapping between diagrams and exclusion configurations, and the
// second-class particle of the Plancherel-TASEP.
//
// Site m + ½ of ℤ + ½ is addressed by the integer m. Adding the box (i, j)
// with content u = i − j moves the particle at u − ½ to the hole at u + ½.

#include <cstdint>
#include <optional>
#include <vector>

#include "tabdyn/diagram.hpp"
#include "tabdyn/plancherel.hpp"

namespace tabdyn {

enum class Site : std::uint8_t { Hole, Particle, SecondClass };

/// Occupancy on the sites lo..hi; left of lo is all particles, right of hi
/// all holes.
struct ParticleConfig {
  int lo = 0;
  int hi = -1;
  std::vector<Site> sites;
  /// Contracted *-pair, if any: the site where the second-class particle sits.
  std::optional<int> second_class;

  [[nodiscard]] Site at(int m) const noexcept {
    if (m < lo) return Site::Particle;
    if (m > hi) return Site::Hole;
    return sites[static_cast<std::size_t>(m - lo)];
  }
};

/// Throws WindowTooSmall unless [lo, hi] ⊇ [−λ'(1) − 1, λ(1) + 1].
ParticleConfig diagram_to_particles(const YoungDiagram& lambda, int lo, int hi);
/// Smallest window that diagram_to_particles accepts.
ParticleConfig diagram_to_particles(const YoungDiagram& lambda);
/// Reads the profile slopes back. Throws WindowTooSmall if the window does
/// not hold the whole perturbation of the step.
YoungDiagram particles_to_diagram(const ParticleConfig& config);

/// Exclusion process on ℤ + ½ with step background; storage grows on demand.
class ExclusionSystem {
 public:
  /// Step initial condition: particles at m < 0.
  ExclusionSystem() = default;

  [[nodiscard]] bool occupied(int m) const noexcept {
    if (m < lo_) return true;
    if (m >= lo_ + static_cast<int>(occ_.size())) return false;
    return occ_[static_cast<std::size_t>(m - lo_)] != 0;
  }
  /// Moves the particle at m to m + 1; throws NotACover if the jump is illegal.
  void jump(int m);
  [[nodiscard]] ParticleConfig config() const;

 private:
  void ensure(int m);

  int lo_ = 0;
  std::vector<std::uint8_t> occ_;
};

/// X(n) and v(n) for n = 0..N−1, anchored at Λ_1 = (1).
struct SecondClassTrajectory {
  std::vector<int> x;
  std::vector<int> v;

  friend bool operator==(const SecondClassTrajectory&, const SecondClassTrajectory&) = default;
};

/// From the natural parametrization (a, b) = q_{n+1}: X(n) = a − b,
/// v(n) = a + b − 2. Throws EmptyTrace.
SecondClassTrajectory second_class_from_growth(const GrowthTrace& trace);
/// Replays the particle jumps and moves the *-pair. Throws EmptyTrace.
SecondClassTrajectory simulate_enhanced(const GrowthTrace& trace);

}  // namespace tabdyn
