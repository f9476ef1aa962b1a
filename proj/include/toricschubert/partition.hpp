#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toricschubert/weyl.hpp"

namespace toricschubert {

/// Weakly decreasing positive parts; zeros are trimmed on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// "3,2,2,1"; the empty string is the empty partition.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const noexcept { return parts_; }
  /// Number of nonzero parts.
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// Number of boxes.
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  /// 0-based part lookup, reading missing parts as 0.
  int part(int i) const noexcept;

  bool fits(int d, int n) const noexcept;

  std::string to_string() const { return format_int_list(parts_); }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the parts sequence.
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// (x, 1^y): one row of length x above y rows of length 1.
struct Hook {
  int x;
  int y;
  int arm() const noexcept { return x - 1; }
  int leg() const noexcept { return y; }
  friend bool operator==(const Hook&, const Hook&) = default;
};

/// Lattice point on the border path; rows count down from the top edge
/// (0..d), columns right from the left edge (0..n-d).
struct Corner {
  int row;
  int col;
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct CornerSet {
  std::vector<Corner> corners;
  int d;
  int n;
};

/// lambda_i = w(d-i+1) - (d-i+1).
Partition lambda_of(const Permutation& w, int d);

/// Inverse of lambda_of inside the d x (n-d) rectangle.
Permutation perm_of(const Partition& lambda, int d, int n);

std::optional<Hook> is_hook(const Partition& lambda);

/// Vertices of the lower border path with path points directly above and
/// directly to the left, walked from the lower-left corner (d,0) to (0,n-d).
CornerSet corners(const Partition& lambda, int d, int n);

bool corners_same_antidiagonal(const Partition& lambda, int d, int n);

/// (p^q) for some p, q >= 1, or empty.
bool is_single_rectangle(const Partition& lambda);

Partition transpose(const Partition& lambda);

/// Componentwise comparison with missing parts read as 0.
bool leq(const Partition& lambda, const Partition& mu);

/// Every partition inside a rows x cols rectangle, in lexicographic order of
/// parts (so the empty partition comes first).
std::vector<Partition> partitions_in_box(int rows, int cols);

}  // namespace toricschubert
