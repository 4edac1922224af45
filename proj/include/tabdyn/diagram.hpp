#pragma once

// Young diagrams, standard tableaux and Russian-coordinate profiles.
//
// Boxes use Cartesian indexing throughout: box (i, j) sits in column i and
// row j, both 1-based, French convention (row 1 at the bottom). A diagram
// stores its row lengths bottom-up, so rows()[j-1] is the number of boxes in
// row j.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tabdyn {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct Box {
  int i = 1;  ///< column
  int j = 1;  ///< row

  friend constexpr bool operator==(Box, Box) = default;
  friend constexpr auto operator<=>(Box, Box) = default;
};

/// u-coordinate (content) of a box.
constexpr int content(Box b) noexcept { return b.i - b.j; }
constexpr Box transpose_box(Box b) noexcept { return {b.j, b.i}; }

class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Validating constructor; throws NotWeaklyDecreasing / NonPositiveRow.
  explicit YoungDiagram(std::vector<int> rows);

  [[nodiscard]] const std::vector<int>& rows() const noexcept { return rows_; }
  [[nodiscard]] std::int64_t size() const noexcept { return size_; }
  [[nodiscard]] bool empty() const noexcept { return rows_.empty(); }
  [[nodiscard]] int num_rows() const noexcept {
    return static_cast<int>(rows_.size());
  }
  /// λ(j), zero beyond the last row.
  [[nodiscard]] int row_length(int j) const noexcept {
    return (j >= 1 && j <= num_rows()) ? rows_[j - 1] : 0;
  }
  [[nodiscard]] int first_row() const noexcept { return row_length(1); }
  /// λ'(i): number of boxes in column i.
  [[nodiscard]] int column_height(int i) const noexcept;
  [[nodiscard]] bool contains(Box b) const noexcept {
    return b.i >= 1 && b.j >= 1 && b.i <= row_length(b.j);
  }
  [[nodiscard]] int hook_length(Box b) const noexcept {
    return row_length(b.j) - b.i + column_height(b.i) - b.j + 1;
  }

  [[nodiscard]] std::vector<Box> addable_boxes() const;
  [[nodiscard]] std::vector<Box> removable_boxes() const;
  [[nodiscard]] bool is_addable(Box b) const noexcept;
  [[nodiscard]] bool is_removable(Box b) const noexcept;
  /// Throws NotACover unless the box is addable.
  [[nodiscard]] YoungDiagram with_box(Box b) const;
  [[nodiscard]] YoungDiagram without_box(Box b) const;
  /// True if every box of *this lies in other.
  [[nodiscard]] bool contained_in(const YoungDiagram& other) const noexcept;
  [[nodiscard]] YoungDiagram transpose() const;

  /// "4,4,3,1"; the empty diagram formats as "".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<int> rows_;
  std::int64_t size_ = 0;
};

YoungDiagram diagram_from_rows(std::span<const int> rows);
/// Parses the comma-separated literal format ("4,4,3,1", "" for ∅).
YoungDiagram parse_diagram(std::string_view literal);
/// All partitions of n in reverse lexicographic order ((n) first).
std::vector<YoungDiagram> partitions_of(int n);

/// f^λ, exact via the hook-length formula.
BigInt count_syt(const YoungDiagram& shape);
/// ln f^λ via log-hook sums; usable far beyond the exact range.
double log_count_syt(const YoungDiagram& shape);
BigInt factorial(int n);

class StandardTableau {
 public:
  StandardTableau() = default;
  /// rows[j-1][i-1] = t_{i,j}. Throws InvalidTableau unless standard.
  static StandardTableau from_rows(std::vector<std::vector<int>> rows);
  /// Unchecked construction for callers that maintain the invariants.
  static StandardTableau from_rows_unchecked(std::vector<std::vector<int>> rows);

  [[nodiscard]] const std::vector<std::vector<int>>& rows() const noexcept {
    return rows_;
  }
  [[nodiscard]] std::int64_t size() const noexcept { return size_; }
  [[nodiscard]] bool empty() const noexcept { return size_ == 0; }
  [[nodiscard]] YoungDiagram shape() const;
  [[nodiscard]] bool contains(Box b) const noexcept {
    return b.j >= 1 && b.j <= static_cast<int>(rows_.size()) && b.i >= 1 &&
           b.i <= static_cast<int>(rows_[b.j - 1].size());
  }
  /// t_{i,j}; precondition contains(b).
  [[nodiscard]] int at(Box b) const noexcept { return rows_[b.j - 1][b.i - 1]; }
  /// Boxes ordered by their entries: result[k-1] holds entry k.
  [[nodiscard]] std::vector<Box> boxes_in_order() const;
  /// Restriction to the entries <= m.
  [[nodiscard]] StandardTableau truncate(std::int64_t m) const;
  [[nodiscard]] StandardTableau transpose() const;

  /// Mutable access for in-place sliding.
  std::vector<std::vector<int>>& mutable_rows() noexcept { return rows_; }
  void set_size(std::int64_t n) noexcept { size_ = n; }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ == b.rows_;
  }
  friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<std::vector<int>> rows_;
  std::int64_t size_ = 0;
};

/// Recording tableau of ∅ = λ_0 ↗ λ_1 ↗ … ↗ λ_n; throws NotACover.
StandardTableau tableau_from_path(std::span<const YoungDiagram> diagrams);
/// Inverse of tableau_from_path; the result starts with ∅.
std::vector<YoungDiagram> path_from_tableau(const StandardTableau& t);
/// Recording tableau of a box sequence; throws NotACover on an illegal box.
StandardTableau tableau_from_boxes(std::span<const Box> boxes);
/// Every standard filling of the shape, by direct enumeration.
std::vector<StandardTableau> all_standard_tableaux(const YoungDiagram& shape);

struct ProfilePoint {
  int u = 0;
  int v = 0;
  friend constexpr bool operator==(ProfilePoint, ProfilePoint) = default;
};

/// φ_λ in Russian coordinates u = x − y, v = x + y: the vertices of the upper
/// boundary of A_λ from (−λ'(1), λ'(1)) to (λ(1), λ(1)), extended by |u|.
class Profile {
 public:
  explicit Profile(const YoungDiagram& shape);

  [[nodiscard]] const std::vector<ProfilePoint>& breakpoints() const noexcept {
    return points_;
  }
  [[nodiscard]] double operator()(double u) const noexcept;

 private:
  std::vector<ProfilePoint> points_;
};

Profile profile(const YoungDiagram& shape);

/// φ̃(u) = φ(s·u)/s with s = √|λ| unless a scale is given.
class RescaledProfile {
 public:
  explicit RescaledProfile(const YoungDiagram& shape);
  RescaledProfile(const YoungDiagram& shape, double scale);

  [[nodiscard]] double operator()(double u) const noexcept {
    return profile_(scale_ * u) / scale_;
  }
  [[nodiscard]] double scale() const noexcept { return scale_; }
  [[nodiscard]] const Profile& base() const noexcept { return profile_; }

 private:
  Profile profile_;
  double scale_;
};

RescaledProfile rescaled_profile(const YoungDiagram& shape, double scale);

}  // namespace tabdyn
