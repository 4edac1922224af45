#include "tabdyn/jdt.hpp"

#include <cmath>
#include <limits>

#include "tabdyn/error.hpp"

namespace tabdyn {
namespace {

constexpr int kOutside = std::numeric_limits<int>::max();

int entry(const std::vector<std::vector<int>>& rows, int i, int j) noexcept {
  if (j < 1 || j > static_cast<int>(rows.size())) return kOutside;
  const auto& row = rows[j - 1];
  if (i < 1 || i > static_cast<int>(row.size())) return kOutside;
  return row[i - 1];
}

}  // namespace

void apply_J_in_place(StandardTableau& t, std::vector<Box>& path) {
  if (t.empty()) throw Error(Errc::EmptyTableau, "cannot slide an empty tableau");
  auto& rows = t.mutable_rows();
  path.clear();
  int i = 1, j = 1;
  path.push_back({i, j});
  for (;;) {
    const int right = entry(rows, i + 1, j);
    const int up = entry(rows, i, j + 1);
    if (right == kOutside && up == kOutside) break;
    if (right < up) {
      rows[j - 1][i - 1] = right;
      ++i;
    } else {
      rows[j - 1][i - 1] = up;
      ++j;
    }
    path.push_back({i, j});
  }
  rows[j - 1].pop_back();
  if (rows[j - 1].empty()) rows.pop_back();
  for (auto& row : rows)
    for (int& v : row) --v;
  t.set_size(t.size() - 1);
}

SlideResult jdt_slide(const StandardTableau& t) {
  SlideResult out{t, {}};
  apply_J_in_place(out.tableau, out.path.boxes);
  return out;
}

StandardTableau apply_J(const StandardTableau& t) {
  StandardTableau out = t;
  std::vector<Box> path;
  apply_J_in_place(out, path);
  return out;
}

StandardTableau jdt_inverse(const StandardTableau& s, const YoungDiagram& nu) {
  const YoungDiagram lambda = s.shape();
  if (nu.size() != lambda.size() + 1 || !lambda.contained_in(nu)) {
    throw Error(Errc::NotACover, "(" + lambda.to_string() + ") does not cover into (" +
                                     nu.to_string() + ")");
  }
  std::vector<std::vector<int>> rows = s.rows();
  for (auto& row : rows)
    for (int& v : row) ++v;
  int j = 1;
  while (lambda.row_length(j) == nu.row_length(j)) ++j;
  if (j > static_cast<int>(rows.size())) rows.emplace_back();
  rows[j - 1].push_back(0);
  int i = static_cast<int>(rows[j - 1].size());
  // reverse slide: the hole moves to the larger of its left and lower neighbours
  while (i > 1 || j > 1) {
    const int left = i > 1 ? rows[j - 1][i - 2] : 0;
    const int down = j > 1 ? rows[j - 2][i - 1] : 0;
    if (left > down) {
      rows[j - 1][i - 1] = left;
      --i;
    } else {
      rows[j - 1][i - 1] = down;
      --j;
    }
  }
  rows[0][0] = 1;
  return StandardTableau::from_rows_unchecked(std::move(rows));
}

LatticePath infinite_path_prefix(const StandardTableau& t, Missing mode) {
  LatticePath path;
  if (t.empty()) {
    path.undetermined_tail = mode == Missing::Undetermined;
    return path;
  }
  const auto& rows = t.rows();
  int i = 1, j = 1;
  path.boxes.push_back({i, j});
  for (;;) {
    const int right = entry(rows, i + 1, j);
    const int up = entry(rows, i, j + 1);
    if (right == kOutside && up == kOutside) {
      // both successors lie beyond the truncation, the next step is unknown
      path.undetermined_tail = mode == Missing::Undetermined;
      break;
    }
    // a single missing neighbour holds an entry > n, so the comparison stands
    if (right < up) {
      ++i;
    } else {
      ++j;
    }
    path.boxes.push_back({i, j});
  }
  return path;
}

NaturalParamPath natural_param(const StandardTableau& t) {
  NaturalParamPath out;
  out.q.reserve(static_cast<std::size_t>(t.size()));
  out.jumped.reserve(static_cast<std::size_t>(t.size()));
  NaturalParamTracker tracker;
  for (const Box d : t.boxes_in_order()) {
    out.jumped.push_back(tracker.push(d));
    out.q.push_back(tracker.current());
  }
  return out;
}

double box_angle(Box b) noexcept {
  return std::atan2(static_cast<double>(b.j - 1), static_cast<double>(b.i - 1));
}

double estimate_angle(const StandardTableau& t, int k, std::int64_t min_entries) {
  if (k < 1) throw Error(Errc::DomainError, "iterate index must be at least 1");
  if (t.size() - (k - 1) < std::max<std::int64_t>(1, min_entries)) {
    throw Error(Errc::Exhausted, "only " + std::to_string(t.size() - (k - 1)) +
                                     " entries remain after " + std::to_string(k - 1) +
                                     " slides");
  }
  if (k == 1) return box_angle(infinite_path_prefix(t, Missing::Infinity).boxes.back());
  StandardTableau cur = t;
  std::vector<Box> scratch;
  for (int r = 1; r < k; ++r) apply_J_in_place(cur, scratch);
  return box_angle(infinite_path_prefix(cur, Missing::Infinity).boxes.back());
}

}  // namespace tabdyn
