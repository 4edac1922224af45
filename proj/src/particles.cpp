#include "tabdyn/particles.hpp"

#include <algorithm>

#include "tabdyn/error.hpp"
#include "tabdyn/jdt.hpp"

namespace tabdyn {

ParticleConfig diagram_to_particles(const YoungDiagram& lambda, int lo, int hi) {
  const int need_lo = -lambda.num_rows() - 1;
  const int need_hi = lambda.first_row() + 1;
  if (lo > need_lo || hi < need_hi) {
    throw Error(Errc::WindowTooSmall, "window [" + std::to_string(lo) + ", " +
                                          std::to_string(hi) + "] must cover [" +
                                          std::to_string(need_lo) + ", " +
                                          std::to_string(need_hi) + "]");
  }
  ParticleConfig c;
  c.lo = lo;
  c.hi = hi;
  c.sites.resize(static_cast<std::size_t>(hi - lo + 1));
  const Profile phi(lambda);
  for (int m = lo; m <= hi; ++m) {
    const double slope = phi(m + 1.0) - phi(static_cast<double>(m));
    c.sites[static_cast<std::size_t>(m - lo)] = slope < 0 ? Site::Particle : Site::Hole;
  }
  return c;
}

ParticleConfig diagram_to_particles(const YoungDiagram& lambda) {
  return diagram_to_particles(lambda, -lambda.num_rows() - 1, lambda.first_row() + 1);
}

YoungDiagram particles_to_diagram(const ParticleConfig& config) {
  // Row j has as many boxes as there are holes left of the j-th particle
  // counted from the right.
  std::vector<int> holes_left;
  int holes = 0;
  int holes_neg = 0;
  int particles_nonneg = 0;
  for (int m = config.lo; m <= config.hi; ++m) {
    switch (config.at(m)) {
      case Site::Hole:
        ++holes;
        holes_neg += m < 0;
        break;
      case Site::Particle:
        holes_left.push_back(holes);
        particles_nonneg += m >= 0;
        break;
      case Site::SecondClass:
        throw Error(Errc::WindowTooSmall, "second-class site has no diagram reading");
    }
  }
  if (holes_neg != particles_nonneg) {
    throw Error(Errc::WindowTooSmall, "configuration is not a diagram in this window");
  }
  std::vector<int> rows;
  for (auto it = holes_left.rbegin(); it != holes_left.rend() && *it > 0; ++it) {
    rows.push_back(*it);
  }
  return YoungDiagram(std::move(rows));
}

void ExclusionSystem::ensure(int m) {
  if (occ_.empty()) {
    lo_ = m;
    occ_.push_back(m < 0 ? 1 : 0);
    return;
  }
  if (m < lo_) {
    const int grow = std::max(lo_ - m, static_cast<int>(occ_.size()));
    occ_.insert(occ_.begin(), static_cast<std::size_t>(grow), 1);
    lo_ -= grow;
  }
  const int hi = lo_ + static_cast<int>(occ_.size()) - 1;
  if (m > hi) {
    const int grow = std::max(m - hi, static_cast<int>(occ_.size()));
    for (int k = 1; k <= grow; ++k) occ_.push_back(hi + k < 0 ? 1 : 0);
  }
}

void ExclusionSystem::jump(int m) {
  if (!occupied(m) || occupied(m + 1)) {
    throw Error(Errc::NotACover, "no particle-hole pair at sites " + std::to_string(m) +
                                     ", " + std::to_string(m + 1));
  }
  ensure(m);
  ensure(m + 1);
  occ_[static_cast<std::size_t>(m - lo_)] = 0;
  occ_[static_cast<std::size_t>(m + 1 - lo_)] = 1;
}

ParticleConfig ExclusionSystem::config() const {
  ParticleConfig c;
  if (occ_.empty()) {
    c.lo = -1;
    c.hi = 0;
    c.sites = {Site::Particle, Site::Hole};
    return c;
  }
  c.lo = lo_;
  c.hi = lo_ + static_cast<int>(occ_.size()) - 1;
  for (auto o : occ_) c.sites.push_back(o ? Site::Particle : Site::Hole);
  return c;
}

SecondClassTrajectory second_class_from_growth(const GrowthTrace& trace) {
  if (trace.boxes.empty()) throw Error(Errc::EmptyTrace, "trace has no boxes");
  SecondClassTrajectory out;
  out.x.reserve(trace.boxes.size());
  out.v.reserve(trace.boxes.size());
  NaturalParamTracker q;
  for (const Box d : trace.boxes) {
    q.push(d);
    const Box c = q.current();
    out.x.push_back(c.i - c.j);
    out.v.push_back(c.i + c.j - 2);
  }
  return out;
}

SecondClassTrajectory simulate_enhanced(const GrowthTrace& trace) {
  if (trace.boxes.empty()) throw Error(Errc::EmptyTrace, "trace has no boxes");
  ExclusionSystem tase;
  SecondClassTrajectory out;
  out.x.reserve(trace.boxes.size());
  out.v.reserve(trace.boxes.size());
  // the *-pair is the hole at h and the particle at h + 1
  int h = 0;
  int moves = 0;
  for (std::size_t k = 0; k < trace.boxes.size(); ++k) {
    const int from = content(trace.boxes[k]) - 1;
    tase.jump(from);
    if (k == 0) {
      h = from;  // Λ_1 = (1): hole at −½, particle at +½
    } else if (from == h + 1) {
      ++h;  // the pair's particle jumped right
      ++moves;
    } else if (from + 1 == h) {
      --h;  // a particle jumped onto the pair's hole
      ++moves;
    }
    out.x.push_back(h + 1);
    out.v.push_back(moves);
  }
  return out;
}

}  // namespace tabdyn
