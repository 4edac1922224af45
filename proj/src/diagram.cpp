#include "tabdyn/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>

#include "tabdyn/error.hpp"

namespace tabdyn {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k] <= 0) {
      throw Error(Errc::NonPositiveRow,
                  "row " + std::to_string(k + 1) + " has length " +
                      std::to_string(rows_[k]));
    }
    if (k > 0 && rows_[k] > rows_[k - 1]) {
      throw Error(Errc::NotWeaklyDecreasing,
                  "row " + std::to_string(k + 1) + " is longer than row " +
                      std::to_string(k));
    }
    size_ += rows_[k];
  }
}

int YoungDiagram::column_height(int i) const noexcept {
  if (i < 1) return 0;
  // rows are weakly decreasing, so the rows of length >= i form a prefix
  const auto it = std::partition_point(rows_.begin(), rows_.end(),
                                       [i](int len) { return len >= i; });
  return static_cast<int>(it - rows_.begin());
}

bool YoungDiagram::is_addable(Box b) const noexcept {
  if (b.i < 1 || b.j < 1) return false;
  if (b.j > num_rows() + 1) return false;
  return row_length(b.j) == b.i - 1 && (b.j == 1 || row_length(b.j - 1) >= b.i);
}

bool YoungDiagram::is_removable(Box b) const noexcept {
  return contains(b) && row_length(b.j) == b.i && row_length(b.j + 1) < b.i;
}

std::vector<Box> YoungDiagram::addable_boxes() const {
  std::vector<Box> out;
  for (int j = 1; j <= num_rows() + 1; ++j) {
    const Box b{row_length(j) + 1, j};
    if (is_addable(b)) out.push_back(b);
  }
  return out;
}

std::vector<Box> YoungDiagram::removable_boxes() const {
  std::vector<Box> out;
  for (int j = 1; j <= num_rows(); ++j) {
    const Box b{row_length(j), j};
    if (is_removable(b)) out.push_back(b);
  }
  return out;
}

YoungDiagram YoungDiagram::with_box(Box b) const {
  if (!is_addable(b)) {
    throw Error(Errc::NotACover, "box (" + std::to_string(b.i) + "," +
                                     std::to_string(b.j) +
                                     ") is not addable to (" + to_string() + ")");
  }
  YoungDiagram out = *this;
  if (b.j > num_rows()) {
    out.rows_.push_back(1);
  } else {
    ++out.rows_[b.j - 1];
  }
  ++out.size_;
  return out;
}

YoungDiagram YoungDiagram::without_box(Box b) const {
  if (!is_removable(b)) {
    throw Error(Errc::NotACover, "box (" + std::to_string(b.i) + "," +
                                     std::to_string(b.j) +
                                     ") is not removable from (" + to_string() +
                                     ")");
  }
  YoungDiagram out = *this;
  if (--out.rows_[b.j - 1] == 0) out.rows_.pop_back();
  --out.size_;
  return out;
}

bool YoungDiagram::contained_in(const YoungDiagram& other) const noexcept {
  if (num_rows() > other.num_rows()) return false;
  for (int j = 1; j <= num_rows(); ++j) {
    if (row_length(j) > other.row_length(j)) return false;
  }
  return true;
}

YoungDiagram YoungDiagram::transpose() const {
  std::vector<int> cols;
  cols.reserve(static_cast<std::size_t>(first_row()));
  for (int i = 1; i <= first_row(); ++i) cols.push_back(column_height(i));
  YoungDiagram out;
  out.rows_ = std::move(cols);
  out.size_ = size_;
  return out;
}

std::string YoungDiagram::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(rows_[k]);
  }
  return s;
}

YoungDiagram diagram_from_rows(std::span<const int> rows) {
  return YoungDiagram(std::vector<int>(rows.begin(), rows.end()));
}

YoungDiagram parse_diagram(std::string_view literal) {
  std::vector<int> rows;
  while (!literal.empty() && literal.front() == ' ') literal.remove_prefix(1);
  while (!literal.empty() && literal.back() == ' ') literal.remove_suffix(1);
  if (literal.empty()) return {};
  std::size_t pos = 0;
  while (pos <= literal.size()) {
    const std::size_t comma = std::min(literal.find(',', pos), literal.size());
    const std::string_view tok = literal.substr(pos, comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || end != tok.data() + tok.size()) {
      throw Error(Errc::MalformedLine,
                  "bad diagram literal '" + std::string(literal) + "'");
    }
    rows.push_back(value);
    pos = comma + 1;
  }
  return YoungDiagram(std::move(rows));
}

std::vector<YoungDiagram> partitions_of(int n) {
  std::vector<YoungDiagram> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

BigInt count_syt(const YoungDiagram& shape) {
  BigInt hooks = 1;
  for (int j = 1; j <= shape.num_rows(); ++j) {
    for (int i = 1; i <= shape.row_length(j); ++i) hooks *= shape.hook_length({i, j});
  }
  return factorial(static_cast<int>(shape.size())) / hooks;
}

double log_count_syt(const YoungDiagram& shape) {
  std::vector<int> cols(static_cast<std::size_t>(shape.first_row()));
  for (int i = 1; i <= shape.first_row(); ++i) cols[i - 1] = shape.column_height(i);
  long double log_hooks = 0.0L;
  for (int j = 1; j <= shape.num_rows(); ++j) {
    const int len = shape.row_length(j);
    for (int i = 1; i <= len; ++i) {
      log_hooks += std::log(static_cast<long double>(len - i + cols[i - 1] - j + 1));
    }
  }
  const long double n = static_cast<long double>(shape.size());
  return static_cast<double>(std::lgamma(n + 1.0L) - log_hooks);
}

// ---------------------------------------------------------------------------

namespace {

// Validates standardness: every value 1..n exactly once, increasing along
// rows and columns, row lengths weakly decreasing.
void check_standard(const std::vector<std::vector<int>>& rows, std::int64_t& size) {
  size = 0;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].empty()) throw Error(Errc::InvalidTableau, "empty row");
    if (j > 0 && rows[j].size() > rows[j - 1].size()) {
      throw Error(Errc::InvalidTableau, "row lengths increase");
    }
    size += static_cast<std::int64_t>(rows[j].size());
  }
  std::vector<char> seen(static_cast<std::size_t>(size) + 1, 0);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t i = 0; i < rows[j].size(); ++i) {
      const int v = rows[j][i];
      if (v < 1 || v > size || seen[v]) {
        throw Error(Errc::InvalidTableau, "entries are not a permutation of 1..n");
      }
      seen[v] = 1;
      if (i > 0 && rows[j][i - 1] >= v) {
        throw Error(Errc::InvalidTableau, "row not increasing");
      }
      if (j > 0 && rows[j - 1][i] >= v) {
        throw Error(Errc::InvalidTableau, "column not increasing");
      }
    }
  }
}

}  // namespace

StandardTableau StandardTableau::from_rows(std::vector<std::vector<int>> rows) {
  StandardTableau t;
  check_standard(rows, t.size_);
  t.rows_ = std::move(rows);
  return t;
}

StandardTableau StandardTableau::from_rows_unchecked(std::vector<std::vector<int>> rows) {
  StandardTableau t;
  for (const auto& r : rows) t.size_ += static_cast<std::int64_t>(r.size());
  t.rows_ = std::move(rows);
  return t;
}

YoungDiagram StandardTableau::shape() const {
  std::vector<int> lens;
  lens.reserve(rows_.size());
  for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
  return YoungDiagram(std::move(lens));
}

std::vector<Box> StandardTableau::boxes_in_order() const {
  std::vector<Box> out(static_cast<std::size_t>(size_));
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    for (std::size_t i = 0; i < rows_[j].size(); ++i) {
      out[rows_[j][i] - 1] = Box{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    }
  }
  return out;
}

StandardTableau StandardTableau::truncate(std::int64_t m) const {
  std::vector<std::vector<int>> rows;
  for (const auto& r : rows_) {
    std::vector<int> kept;
    for (int v : r) {
      if (v > m) break;
      kept.push_back(v);
    }
    if (kept.empty()) break;
    rows.push_back(std::move(kept));
  }
  return from_rows_unchecked(std::move(rows));
}

StandardTableau StandardTableau::transpose() const {
  std::vector<std::vector<int>> cols;
  if (!rows_.empty()) {
    cols.resize(rows_[0].size());
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) cols[i].push_back(r[i]);
    }
  }
  return from_rows_unchecked(std::move(cols));
}

StandardTableau tableau_from_path(std::span<const YoungDiagram> diagrams) {
  if (diagrams.empty() || !diagrams.front().empty()) {
    throw Error(Errc::NotACover, "path must start at the empty diagram");
  }
  std::vector<std::vector<int>> rows;
  for (std::size_t k = 1; k < diagrams.size(); ++k) {
    const YoungDiagram& prev = diagrams[k - 1];
    const YoungDiagram& next = diagrams[k];
    if (next.size() != prev.size() + 1 || !prev.contained_in(next)) {
      throw Error(Errc::NotACover, "step " + std::to_string(k) + ": (" +
                                       prev.to_string() + ") does not cover into (" +
                                       next.to_string() + ")");
    }
    int j = 1;
    while (prev.row_length(j) == next.row_length(j)) ++j;
    if (j > static_cast<int>(rows.size())) rows.emplace_back();
    rows[j - 1].push_back(static_cast<int>(k));
  }
  return StandardTableau::from_rows_unchecked(std::move(rows));
}

std::vector<YoungDiagram> path_from_tableau(const StandardTableau& t) {
  std::vector<YoungDiagram> out;
  out.reserve(static_cast<std::size_t>(t.size()) + 1);
  YoungDiagram current;
  out.push_back(current);
  for (const Box b : t.boxes_in_order()) {
    current = current.with_box(b);
    out.push_back(current);
  }
  return out;
}

StandardTableau tableau_from_boxes(std::span<const Box> boxes) {
  std::vector<std::vector<int>> rows;
  int k = 0;
  for (const Box b : boxes) {
    ++k;
    const int nrows = static_cast<int>(rows.size());
    const bool ok = b.j >= 1 && b.j <= nrows + 1 &&
                    b.i == (b.j <= nrows ? static_cast<int>(rows[b.j - 1].size()) : 0) + 1 &&
                    (b.j == 1 || static_cast<int>(rows[b.j - 2].size()) >= b.i);
    if (!ok) {
      throw Error(Errc::NotACover, "box " + std::to_string(k) + " at (" +
                                       std::to_string(b.i) + "," +
                                       std::to_string(b.j) + ") is not addable");
    }
    if (b.j > nrows) rows.emplace_back();
    rows[b.j - 1].push_back(k);
  }
  return StandardTableau::from_rows_unchecked(std::move(rows));
}

std::vector<StandardTableau> all_standard_tableaux(const YoungDiagram& shape) {
  // Place n, n-1, ..., 1 into successive removable corners.
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> fill(static_cast<std::size_t>(shape.num_rows()));
  for (int j = 1; j <= shape.num_rows(); ++j) fill[j - 1].assign(shape.row_length(j), 0);
  std::function<void(const YoungDiagram&)> rec = [&](const YoungDiagram& current) {
    if (current.empty()) {
      out.push_back(StandardTableau::from_rows_unchecked(fill));
      return;
    }
    for (const Box b : current.removable_boxes()) {
      fill[b.j - 1][b.i - 1] = static_cast<int>(current.size());
      rec(current.without_box(b));
    }
  };
  rec(shape);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

Profile::Profile(const YoungDiagram& shape) {
  const int k = shape.num_rows();
  if (k == 0) {
    points_.push_back({0, 0});
    return;
  }
  // Walk the outer boundary from (x, y) = (0, k) to (λ(1), 0): east along
  // the top of each row, then south one unit. Keep only turning points.
  int x = 0;
  int y = k;
  points_.push_back({x - y, x + y});
  for (int j = k; j >= 1; --j) {
    const int len = shape.row_length(j);
    if (len > x) {
      x = len;
      points_.push_back({x - y, x + y});
    }
    --y;
    if (j == 1 || shape.row_length(j - 1) > x) points_.push_back({x - y, x + y});
  }
  // drop vertices that are not turning points (the south runs merge)
  std::vector<ProfilePoint> turning;
  for (std::size_t m = 0; m < points_.size(); ++m) {
    if (m > 0 && m + 1 < points_.size()) {
      const int s1 = points_[m].v - points_[m - 1].v;
      const int s2 = points_[m + 1].v - points_[m].v;
      const int d1 = points_[m].u - points_[m - 1].u;
      const int d2 = points_[m + 1].u - points_[m].u;
      if (static_cast<long>(s1) * d2 == static_cast<long>(s2) * d1) continue;
    }
    turning.push_back(points_[m]);
  }
  points_ = std::move(turning);
}

double Profile::operator()(double u) const noexcept {
  if (u <= points_.front().u || u >= points_.back().u) return std::abs(u);
  const auto it = std::upper_bound(points_.begin(), points_.end(), u,
                                   [](double x, const ProfilePoint& p) { return x < p.u; });
  const ProfilePoint& hi = *it;
  const ProfilePoint& lo = *(it - 1);
  const double t = (u - lo.u) / static_cast<double>(hi.u - lo.u);
  return lo.v + t * (hi.v - lo.v);
}

Profile profile(const YoungDiagram& shape) { return Profile(shape); }

RescaledProfile::RescaledProfile(const YoungDiagram& shape)
    : RescaledProfile(shape, std::sqrt(static_cast<double>(std::max<std::int64_t>(1, shape.size())))) {}

RescaledProfile::RescaledProfile(const YoungDiagram& shape, double scale)
    : profile_(shape), scale_(scale) {}

RescaledProfile rescaled_profile(const YoungDiagram& shape, double scale) {
  return RescaledProfile(shape, scale);
}

}  // namespace tabdyn
