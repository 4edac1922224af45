#include "tabdyn/rsk.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "tabdyn/error.hpp"

namespace tabdyn {
namespace {

std::uint64_t key_of(double x) noexcept {
  if (x == 0.0) x = 0.0;
  return std::bit_cast<std::uint64_t>(x);
}

std::uint64_t mix(std::uint64_t k) noexcept {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdULL;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ULL;
  k ^= k >> 33;
  return k;
}

}  // namespace

bool DistinctReals::insert(double x) {
  if ((size_ + 1) * 2 > slots_.size()) grow();
  const std::uint64_t key = key_of(x);
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = mix(key) & mask;; s = (s + 1) & mask) {
    if (slots_[s] == key) return false;
    if (slots_[s] == kEmpty) {
      slots_[s] = key;
      ++size_;
      return true;
    }
  }
}

bool DistinctReals::contains(double x) const noexcept {
  if (slots_.empty()) return false;
  const std::uint64_t key = key_of(x);
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = mix(key) & mask;; s = (s + 1) & mask) {
    if (slots_[s] == key) return true;
    if (slots_[s] == kEmpty) return false;
  }
}

void DistinctReals::clear() noexcept {
  slots_.clear();
  size_ = 0;
}

void DistinctReals::grow() {
  std::vector<std::uint64_t> old = std::move(slots_);
  slots_.assign(std::max<std::size_t>(16, old.size() * 2), kEmpty);
  size_ = 0;
  const std::size_t mask = slots_.size() - 1;
  for (std::uint64_t key : old) {
    if (key == kEmpty) continue;
    std::size_t s = mix(key) & mask;
    while (slots_[s] != kEmpty) s = (s + 1) & mask;
    slots_[s] = key;
    ++size_;
  }
}

Box RealTableau::insert(double x) {
  if (!std::isfinite(x)) throw Error(Errc::DomainError, "insertion value is not finite");
  if (!seen_.insert(x)) throw Error(Errc::DuplicateEntry, "value already present");
  // a value bumped from column c lands in column <= c of the next row
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    auto& row = rows_[j];
    const auto end = row.begin() + static_cast<std::ptrdiff_t>(std::min(limit, row.size()));
    const auto it = std::upper_bound(row.begin(), end, x);
    if (it == row.end()) {
      row.push_back(x);
      return Box{static_cast<int>(row.size()), static_cast<int>(j) + 1};
    }
    limit = static_cast<std::size_t>(it - row.begin()) + 1;
    std::swap(*it, x);
  }
  rows_.push_back({x});
  return Box{1, static_cast<int>(rows_.size())};
}

Box RealTableau::probe(double x) const {
  if (!std::isfinite(x)) throw Error(Errc::DomainError, "insertion value is not finite");
  if (seen_.contains(x)) throw Error(Errc::DuplicateEntry, "value already present");
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const auto& row = rows_[j];
    const auto end = row.begin() + static_cast<std::ptrdiff_t>(std::min(limit, row.size()));
    const auto it = std::upper_bound(row.begin(), end, x);
    if (it == row.end()) {
      return Box{static_cast<int>(row.size()) + 1, static_cast<int>(j) + 1};
    }
    limit = static_cast<std::size_t>(it - row.begin()) + 1;
    x = *it;
  }
  return Box{1, static_cast<int>(rows_.size()) + 1};
}

YoungDiagram RealTableau::shape() const {
  std::vector<int> lens;
  lens.reserve(rows_.size());
  for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
  return YoungDiagram(std::move(lens));
}

bool RealTableau::is_increasing() const {
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const auto& row = rows_[j];
    if (row.empty()) return false;
    if (std::adjacent_find(row.begin(), row.end(), std::greater_equal<>()) != row.end()) {
      return false;
    }
    if (j == 0) continue;
    const auto& below = rows_[j - 1];
    if (row.size() > below.size()) return false;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (below[i] >= row[i]) return false;
    }
  }
  return true;
}

RskOutput rsk_finite(std::span<const double> xs) {
  RealTableau p;
  std::vector<Box> boxes;
  boxes.reserve(xs.size());
  for (double x : xs) boxes.push_back(p.insert(x));
  RskOutput out{p.shape(), std::move(p), tableau_from_boxes(boxes)};
  return out;
}

Box rec_last_box(std::span<const double> xs) {
  if (xs.empty()) throw Error(Errc::EmptyInput, "rec_last_box needs at least one value");
  RealTableau p;
  Box last{};
  for (double x : xs) last = p.insert(x);
  return last;
}

}  // namespace tabdyn
