#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bruhat_taquin/error.hpp"

namespace bruhat_taquin {

/// A box of a Young diagram in English coordinates, 1-indexed (row 1 on top).
struct Box {
  int row = 0;
  int col = 0;

  int content() const { return col - row; }
  auto operator<=>(const Box&) const = default;
};

/// Integer partition with its parts stored weakly decreasing and strictly positive.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
        throw Error(ErrorCode::InvalidPartition, "parts must be positive and weakly decreasing: " + to_string_of(parts_));
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Row length, 0 beyond the last part.
  int part(int row) const { return row >= 1 && row <= length() ? parts_[row - 1] : 0; }

  bool contains(Box b) const { return b.row >= 1 && b.col >= 1 && b.col <= part(b.row); }

  bool contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int r = 1; r <= other.length(); ++r)
      if (other.part(r) > part(r)) return false;
    return true;
  }

  Partition conjugate() const {
    std::vector<int> out;
    if (!parts_.empty()) {
      for (int c = 1; c <= parts_.front(); ++c) {
        int h = 0;
        while (h < length() && parts_[h] >= c) ++h;
        out.push_back(h);
      }
    }
    return Partition(std::move(out));
  }

  std::vector<Box> addable_boxes() const {
    std::vector<Box> out;
    for (int r = 1; r <= length() + 1; ++r)
      if (r == 1 || part(r) < part(r - 1)) out.push_back({r, part(r) + 1});
    return out;
  }

  std::vector<Box> removable_boxes() const {
    std::vector<Box> out;
    for (int r = 1; r <= length(); ++r)
      if (part(r) > part(r + 1)) out.push_back({r, part(r)});
    return out;
  }

  Partition with_box(Box b) const {
    std::vector<int> p = parts_;
    if (b.row == length() + 1 && b.col == 1) {
      p.push_back(1);
    } else if (b.row >= 1 && b.row <= length() && b.col == part(b.row) + 1 && (b.row == 1 || part(b.row - 1) > part(b.row))) {
      ++p[b.row - 1];
    } else {
      throw Error(ErrorCode::InvalidBox, "box (" + std::to_string(b.row) + "," + std::to_string(b.col) + ") is not addable to " + to_string());
    }
    return Partition(std::move(p));
  }

  Partition without_box(Box b) const {
    if (!(b.row >= 1 && b.row <= length() && b.col == part(b.row) && part(b.row + 1) < b.col))
      throw Error(ErrorCode::InvalidBox, "box (" + std::to_string(b.row) + "," + std::to_string(b.col) + ") is not removable from " + to_string());
    std::vector<int> p = parts_;
    --p[b.row - 1];
    return Partition(std::move(p));
  }

  std::string to_string() const { return to_string_of(parts_); }

  auto operator<=>(const Partition&) const = default;

 private:
  static std::string to_string_of(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  }

  std::vector<int> parts_;
};

/// The single box by which `larger` exceeds `smaller`; throws if they differ otherwise.
inline Box added_box(const Partition& smaller, const Partition& larger) {
  if (larger.size() != smaller.size() + 1 || !larger.contains(smaller))
    throw Error(ErrorCode::InvalidPartition, larger.to_string() + " does not cover " + smaller.to_string());
  for (int r = 1; r <= larger.length(); ++r)
    if (larger.part(r) != smaller.part(r)) return {r, larger.part(r)};
  throw Error(ErrorCode::InvalidPartition, "no added box");
}

/// All partitions of `n`, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n, int max_part = -1, int max_length = -1) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (max_part < 0) max_part = n;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_length >= 0 && static_cast<int>(cur.size()) >= max_length) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, max_part);
  return out;
}

/// Partitions contained in `outer` (including the empty one and `outer` itself).
inline std::vector<Partition> subpartitions(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int row, int cap) -> void {
    if (row > outer.length() || cap == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(cap, outer.part(row)); p >= 0; --p) {
      if (p == 0) {
        out.emplace_back(cur);
        continue;
      }
      cur.push_back(p);
      self(self, row + 1, p);
      cur.pop_back();
    }
  };
  rec(rec, 1, outer.empty() ? 0 : outer.part(1));
  return out;
}

/// Number of standard Young tableaux of straight shape (hook length formula).
inline long long count_standard_tableaux(const Partition& shape) {
  const Partition conj = shape.conjugate();
  std::vector<int> hooks;
  for (int r = 1; r <= shape.length(); ++r)
    for (int c = 1; c <= shape.part(r); ++c) hooks.push_back(shape.part(r) - c + conj.part(c) - r + 1);
  // n! / prod(hooks) with exact cancellation.
  std::vector<long long> factors;
  for (int i = 2; i <= shape.size(); ++i) factors.push_back(i);
  for (int h : hooks) {
    long long rest = h;
    for (auto& f : factors) {
      if (rest == 1) break;
      long long g = std::gcd(f, rest);
      f /= g;
      rest /= g;
    }
  }
  long long result = 1;
  for (long long f : factors) result *= f;
  return result;
}

}  // namespace bruhat_taquin
