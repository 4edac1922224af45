#pragma once

// Robinson-Schensted row insertion on tableaux of distinct reals.

#include <cstdint>
#include <span>
#include <vector>

#include "tabdyn/diagram.hpp"

namespace tabdyn {

/// Open-addressing set of doubles keyed on their bit patterns (+0 and -0
/// collapse). Used to reject repeated insertion values in O(1).
class DistinctReals {
 public:
  /// Returns false if x was already present.
  bool insert(double x);
  [[nodiscard]] bool contains(double x) const noexcept;
  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  void clear() noexcept;

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
  void grow();

  std::vector<std::uint64_t> slots_;
  std::size_t size_ = 0;
};

/// Insertion tableau P: rows[j-1] is row j, strictly increasing; columns are
/// strictly increasing as a consequence of row bumping.
class RealTableau {
 public:
  RealTableau() = default;

  /// Inserts x by row bumping and returns the new box.
  /// Throws DuplicateEntry if x is present, DomainError if x is not finite.
  Box insert(double x);
  /// The box insert(x) would create, without modifying the tableau.
  [[nodiscard]] Box probe(double x) const;

  [[nodiscard]] const std::vector<std::vector<double>>& rows() const noexcept {
    return rows_;
  }
  [[nodiscard]] std::int64_t size() const noexcept {
    return static_cast<std::int64_t>(seen_.size());
  }
  [[nodiscard]] YoungDiagram shape() const;
  /// Rows and columns strictly increasing, rows weakly decreasing in length.
  [[nodiscard]] bool is_increasing() const;

 private:
  std::vector<std::vector<double>> rows_;
  DistinctReals seen_;
};

struct RskOutput {
  YoungDiagram shape;
  RealTableau insertion;
  StandardTableau recording;
};

RskOutput rsk_finite(std::span<const double> xs);
/// Box holding n in the recording tableau; throws EmptyInput on empty xs.
Box rec_last_box(std::span<const double> xs);

/// Infinite RSK on a stream: keeps P internally and reports each new box.
class StreamingRecorder {
 public:
  Box push(double x) { return insertion_.insert(x); }
  [[nodiscard]] Box probe(double x) const { return insertion_.probe(x); }
  [[nodiscard]] const RealTableau& insertion() const noexcept { return insertion_; }
  [[nodiscard]] std::int64_t size() const noexcept { return insertion_.size(); }

 private:
  RealTableau insertion_;
};

}  // namespace tabdyn
