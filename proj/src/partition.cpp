#include "toricschubert/partition.hpp"

#include <algorithm>
#include <numeric>

#include "toricschubert/errors.hpp"

namespace toricschubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorCode::InvalidPartition, "parts " + format_int_list(parts_) + " are not weakly decreasing positive");
    }
  }
}

Partition Partition::parse(std::string_view text) { return Partition(parse_int_list(text)); }

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const noexcept {
  return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
}

bool Partition::fits(int d, int n) const noexcept {
  return length() <= d && (empty() || parts_.front() <= n - d);
}

namespace {

void require_fits(const Partition& lambda, int d, int n) {
  if (d < 0 || n < d || !lambda.fits(d, n)) {
    throw Error(ErrorCode::DoesNotFit, "partition (" + lambda.to_string() + ") does not fit in " + std::to_string(d) +
                                           "x" + std::to_string(n - d));
  }
}

}  // namespace

Partition lambda_of(const Permutation& w, int d) {
  if (!is_grassmannian(w, d)) {
    throw Error(ErrorCode::NotGrassmannian, w.to_string() + " has a descent outside position " + std::to_string(d));
  }
  std::vector<int> parts;
  for (int i = 1; i <= d; ++i) parts.push_back(w(d - i + 1) - (d - i + 1));
  return Partition(std::move(parts));
}

Permutation perm_of(const Partition& lambda, int d, int n) {
  require_fits(lambda, d, n);
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= d; ++i) {
    const int value = lambda.part(i - 1) + (d - i + 1);
    values[static_cast<std::size_t>(d - i)] = value;
    used[static_cast<std::size_t>(value)] = true;
  }
  int next = 1;
  for (int pos = d; pos < n; ++pos) {
    while (used[static_cast<std::size_t>(next)]) ++next;
    values[static_cast<std::size_t>(pos)] = next++;
  }
  return Permutation(std::move(values));
}

std::optional<Hook> is_hook(const Partition& lambda) {
  if (lambda.empty()) return std::nullopt;
  for (int i = 1; i < lambda.length(); ++i) {
    if (lambda.part(i) != 1) return std::nullopt;
  }
  return Hook{lambda.part(0), lambda.length() - 1};
}

CornerSet corners(const Partition& lambda, int d, int n) {
  require_fits(lambda, d, n);
  CornerSet out{{}, d, n};
  // Walk row lines from the bottom: move right along row line r to column
  // lambda_r, then up. A corner is where a horizontal run ends and the path
  // turns upward.
  int col = 0;
  for (int r = d; r >= 1; --r) {
    const int target = lambda.part(r - 1);
    if (target > col) {
      col = target;
      out.corners.push_back({r, col});
    }
  }
  return out;
}

bool corners_same_antidiagonal(const Partition& lambda, int d, int n) {
  const CornerSet cs = corners(lambda, d, n);
  return std::all_of(cs.corners.begin(), cs.corners.end(), [&](const Corner& c) {
    return c.row + c.col == cs.corners.front().row + cs.corners.front().col;
  });
}

bool is_single_rectangle(const Partition& lambda) {
  const auto parts = lambda.parts();
  return std::adjacent_find(parts.begin(), parts.end(), std::not_equal_to<>()) == parts.end();
}

Partition transpose(const Partition& lambda) {
  std::vector<int> parts;
  for (int c = 1; c <= lambda.part(0); ++c) {
    int count = 0;
    while (lambda.part(count) >= c) ++count;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

bool leq(const Partition& lambda, const Partition& mu) {
  const int len = std::max(lambda.length(), mu.length());
  for (int i = 0; i < len; ++i) {
    if (lambda.part(i) > mu.part(i)) return false;
  }
  return true;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  if (rows < 0 || cols < 0) throw Error(ErrorCode::InvalidParam, "negative box size");
  std::vector<Partition> out;
  std::vector<int> parts;
  const auto grow = [&](auto&& self, int cap) -> void {
    out.emplace_back(parts);
    if (static_cast<int>(parts.size()) == rows) return;
    for (int p = 1; p <= cap; ++p) {
      parts.push_back(p);
      self(self, p);
      parts.pop_back();
    }
  };
  grow(grow, cols);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace toricschubert
