#include "tabdyn/corner_growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tabdyn/error.hpp"

namespace tabdyn {

LastPassageGrid::LastPassageGrid(const std::vector<std::vector<double>>& weights) {
  height_ = static_cast<int>(weights.size());
  width_ = height_ ? static_cast<int>(weights[0].size()) : 0;
  w_.assign(width_, std::vector<double>(height_));
  g_.assign(width_, std::vector<double>(height_));
  c_.assign(width_, std::vector<Colour>(height_));
  for (int j = 1; j <= height_; ++j) {
    if (static_cast<int>(weights[j - 1].size()) != width_) {
      throw Error(Errc::DomainError, "weight rows have different lengths");
    }
    for (int i = 1; i <= width_; ++i) fill(i, j, weights[j - 1][i - 1]);
  }
}

void LastPassageGrid::fill(int i, int j, double w) {
  const auto ci = static_cast<std::size_t>(i - 1);
  const auto cj = static_cast<std::size_t>(j - 1);
  const double left = G(i - 1, j);
  const double below = G(i, j - 1);
  w_[ci][cj] = w;
  g_[ci][cj] = w + std::max(left, below);
  Colour c = Colour::None;
  if (i > 1 && j == 1) {
    c = Colour::Red;
  } else if (i == 1 && j > 1) {
    c = Colour::Green;
  } else if (i > 1 && j > 1) {
    c = left > below ? colour(i - 1, j) : colour(i, j - 1);
  }
  c_[ci][cj] = c;
}

void LastPassageGrid::add_column() {
  if (!rng_) throw std::logic_error("grid has no generator to extend with");
  ++width_;
  w_.emplace_back(static_cast<std::size_t>(height_));
  g_.emplace_back(static_cast<std::size_t>(height_));
  c_.emplace_back(static_cast<std::size_t>(height_));
  for (int j = 1; j <= height_; ++j) fill(width_, j, rng_->exponential());
}

void LastPassageGrid::add_row() {
  if (!rng_) throw std::logic_error("grid has no generator to extend with");
  ++height_;
  for (int i = 1; i <= width_; ++i) {
    const auto ci = static_cast<std::size_t>(i - 1);
    w_[ci].push_back(0.0);
    g_[ci].push_back(0.0);
    c_[ci].push_back(Colour::None);
    fill(i, height_, rng_->exponential());
  }
}

void LastPassageGrid::ensure(int w, int h) {
  while (width_ < w) add_column();
  while (height_ < h) add_row();
}

double LastPassageGrid::certified_horizon() const noexcept {
  if (width_ == 0 || height_ == 0) return 0.0;
  return std::min(G(width_, 1), G(1, height_));
}

void LastPassageGrid::cover_time(double t) {
  ensure(1, 1);
  while (G(width_, 1) <= t) add_column();
  while (G(1, height_) <= t) add_row();
}

CornerGrowthRun::CornerGrowthRun(int m, Rng& rng) : grid_(rng) {
  grid_.ensure(m, m);
  grid_.detach();
}

CornerGrowthRun::CornerGrowthRun(const std::vector<std::vector<double>>& weights)
    : grid_(weights) {}

namespace {

std::vector<Box> boxes_sorted_by_g(const LastPassageGrid& g, double limit) {
  std::vector<std::pair<double, Box>> keyed;
  for (int i = 1; i <= g.width(); ++i) {
    for (int j = 1; j <= g.height(); ++j) {
      if (g.G(i, j) > limit) break;
      keyed.push_back({g.G(i, j), Box{i, j}});
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Box> out;
  out.reserve(keyed.size());
  for (const auto& kv : keyed) out.push_back(kv.second);
  return out;
}

}  // namespace

std::vector<Box> CornerGrowthRun::growth_order() const {
  return boxes_sorted_by_g(grid_, std::numeric_limits<double>::infinity());
}

std::vector<Box> CornerGrowthRun::certified_order() const {
  return boxes_sorted_by_g(grid_, horizon());
}

LatticePath interface_by_colour(const CornerGrowthRun& run) {
  const LastPassageGrid& g = run.grid();
  const double horizon = run.horizon();
  auto in_region = [&](int i, int j) { return g.contains({i, j}) && g.G(i, j) <= horizon; };
  LatticePath path;
  if (!in_region(1, 1)) {
    path.undetermined_tail = true;
    return path;
  }
  int a = 1, b = 1;
  path.boxes.push_back({a, b});
  for (;;) {
    const bool has_nw = in_region(a, b + 1);
    const bool has_se = in_region(a + 1, b);
    if (has_nw && g.colour(a, b + 1) != Colour::Green) {
      throw std::logic_error("box above the interface is not green");
    }
    if (has_se && g.colour(a + 1, b) != Colour::Red) {
      throw std::logic_error("box right of the interface is not red");
    }
    if (!has_nw && !has_se) {
      path.undetermined_tail = true;
      break;
    }
    bool right;
    if (has_nw && has_se) {
      // the box diagonally above takes the colour of whichever of the two
      // was infected later
      Colour ne;
      if (g.contains({a + 1, b + 1})) {
        ne = g.colour(a + 1, b + 1);
      } else {
        ne = g.G(a, b + 1) > g.G(a + 1, b) ? Colour::Green : Colour::Red;
      }
      right = ne == Colour::Green;
    } else {
      // the neighbour outside the region is infected later still
      right = has_se;
    }
    if (right) {
      ++a;
    } else {
      ++b;
    }
    path.boxes.push_back({a, b});
  }
  return path;
}

LatticePath interface_by_jdt(const CornerGrowthRun& run) {
  return infinite_path_prefix(run.recording_tableau(), Missing::Undetermined);
}

std::vector<Box> follow_interface(LastPassageGrid& grid, int steps) {
  std::vector<Box> path;
  path.reserve(static_cast<std::size_t>(steps) + 1);
  int a = 1, b = 1;
  grid.ensure(1, 1);
  path.push_back({a, b});
  for (int s = 0; s < steps; ++s) {
    grid.ensure(a + 1, b + 1);
    if (grid.G(a + 1, b) < grid.G(a, b + 1)) {
      ++a;
    } else {
      ++b;
    }
    path.push_back({a, b});
  }
  return path;
}

std::vector<TaseEvent> tasep_second_class_trajectory(LastPassageGrid& grid, double t) {
  grid.ensure(1, 1);
  const double origin = grid.G(1, 1);
  std::vector<TaseEvent> out{{0.0, 0}};
  int a = 1, b = 1;
  for (;;) {
    grid.ensure(a + 1, b + 1);
    const bool right = grid.G(a + 1, b) < grid.G(a, b + 1);
    const int na = right ? a + 1 : a;
    const int nb = right ? b : b + 1;
    const double when = grid.G(na, nb) - origin;
    if (when > t) break;
    a = na;
    b = nb;
    out.push_back({when, a - b});
  }
  return out;
}

int tasep_second_class(LastPassageGrid& grid, double t) {
  return tasep_second_class_trajectory(grid, t).back().x;
}

namespace {

struct Pt {
  double x, y;
};

double segment_distance(Pt p, Pt a, Pt b) noexcept {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double s = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return std::hypot(p.x - (a.x + s * dx), p.y - (a.y + s * dy));
}

double polyline_distance(Pt p, const std::vector<Pt>& line) noexcept {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < line.size(); ++k) {
    best = std::min(best, segment_distance(p, line[k - 1], line[k]));
  }
  return best;
}

bool rost_contains(Pt p) noexcept {
  return p.x >= 0 && p.y >= 0 && std::sqrt(p.x) + std::sqrt(p.y) <= 1.0;
}

}  // namespace

double rost_hausdorff_distance(LastPassageGrid& grid, double t) {
  grid.cover_time(t);
  std::vector<int> heights;
  for (int i = 1; i <= grid.width(); ++i) {
    int h = 0;
    while (h < grid.height() && grid.G(i, h + 1) <= t) ++h;
    if (h == 0) break;
    heights.push_back(h);
  }
  // boundary of the rescaled growth region, counter-clockwise from (0, h_1)
  std::vector<Pt> region{{0.0, 0.0}};
  for (std::size_t c = 0; c < heights.size(); ++c) {
    region.push_back({c / t, heights[c] / t});
    region.push_back({(c + 1) / t, heights[c] / t});
  }
  region.push_back({heights.size() / t, 0.0});
  region.push_back({0.0, 0.0});
  auto in_region = [&](Pt p) {
    if (p.x < 0 || p.y < 0) return false;
    const auto col = static_cast<std::size_t>(std::max(0.0, std::ceil(p.x * t) - 1));
    return col < heights.size() && p.y * t <= heights[col];
  };

  constexpr int kCurve = 4000;
  std::vector<Pt> rost;
  rost.reserve(kCurve + 1);
  for (int k = 0; k <= kCurve; ++k) {
    const double s = static_cast<double>(k) / kCurve;
    rost.push_back({s * s, (1 - s) * (1 - s)});
  }
  double d = 0.0;
  for (const Pt p : region) {
    if (!rost_contains(p)) d = std::max(d, polyline_distance(p, rost));
  }
  for (std::size_t k = 1; k < region.size(); ++k) {
    const Pt mid{0.5 * (region[k - 1].x + region[k].x), 0.5 * (region[k - 1].y + region[k].y)};
    if (!rost_contains(mid)) d = std::max(d, polyline_distance(mid, rost));
  }
  std::vector<Pt> rost_edge = rost;
  for (int k = 0; k <= 1000; ++k) {
    rost_edge.push_back({k / 1000.0, 0.0});
    rost_edge.push_back({0.0, k / 1000.0});
  }
  for (const Pt p : rost_edge) {
    if (!in_region(p)) d = std::max(d, polyline_distance(p, region));
  }
  return d;
}

}  // namespace tabdyn
