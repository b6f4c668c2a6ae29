#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bruhat_taquin/error.hpp"
#include "bruhat_taquin/partition.hpp"

namespace bruhat_taquin {

struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition out, Partition in = {}) : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner))
      throw Error(ErrorCode::ShapeMismatch, inner.to_string() + " is not contained in " + outer.to_string());
  }

  int size() const { return outer.size() - inner.size(); }
  bool contains(Box b) const { return outer.contains(b) && !inner.contains(b); }
  bool is_straight() const { return inner.empty(); }

  std::string to_string() const { return outer.to_string() + "/" + inner.to_string(); }
  auto operator<=>(const SkewShape&) const = default;
};

/// Saturated chain mu = members[0] < members[1] < ... in Young's lattice.
struct YoungChain {
  std::vector<Partition> members;

  YoungChain() = default;
  explicit YoungChain(std::vector<Partition> m) : members(std::move(m)) {
    if (members.empty()) throw Error(ErrorCode::InvalidChain, "a Young chain needs at least one member");
    for (std::size_t i = 1; i < members.size(); ++i) added_box(members[i - 1], members[i]);
  }

  int length() const { return static_cast<int>(members.size()) - 1; }
  const Partition& bottom() const { return members.front(); }
  const Partition& top() const { return members.back(); }
  auto operator<=>(const YoungChain&) const = default;
};

/// Filling of a (possibly skew) shape; rows are stored in full with 0 marking cells of the inner shape.
class Tableau {
 public:
  Tableau() = default;

  Tableau(SkewShape shape, std::vector<std::vector<int>> rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.outer.length())
      throw Error(ErrorCode::ShapeMismatch, "row count does not match shape " + shape_.to_string());
    for (int r = 1; r <= shape_.outer.length(); ++r) {
      if (static_cast<int>(rows_[r - 1].size()) != shape_.outer.part(r))
        throw Error(ErrorCode::ShapeMismatch, "row " + std::to_string(r) + " has the wrong length for " + shape_.to_string());
      for (int c = 1; c <= shape_.outer.part(r); ++c) {
        const bool inner = shape_.inner.contains(Box{r, c});
        if (inner != (rows_[r - 1][c - 1] == 0))
          throw Error(ErrorCode::ShapeMismatch, "inner cells must hold 0 and skew cells a positive entry");
      }
    }
  }

  /// Straight-shape tableau from its rows.
  static Tableau straight(std::vector<std::vector<int>> rows) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Tableau(SkewShape(Partition(parts)), std::move(rows));
  }

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int at(Box b) const { return rows_[b.row - 1][b.col - 1]; }
  int size() const { return shape_.size(); }

  /// Boxes of the skew part in row-major order.
  std::vector<Box> boxes() const {
    std::vector<Box> out;
    for (int r = 1; r <= shape_.outer.length(); ++r)
      for (int c = shape_.inner.part(r) + 1; c <= shape_.outer.part(r); ++c) out.push_back({r, c});
    return out;
  }

  std::optional<Box> find(int entry) const {
    for (const Box& b : boxes())
      if (at(b) == entry) return b;
    return std::nullopt;
  }

  /// Entries bijective onto 1..size with rows and columns strictly increasing.
  bool is_standard() const {
    std::vector<bool> seen(size() + 1, false);
    for (const Box& b : boxes()) {
      const int e = at(b);
      if (e < 1 || e > size() || seen[e]) return false;
      seen[e] = true;
    }
    return rows_columns_increase(true, true);
  }

  /// Rows weakly and columns strictly increasing, positive entries.
  bool is_semistandard() const {
    for (const Box& b : boxes())
      if (at(b) < 1) return false;
    return rows_columns_increase(false, true);
  }

  /// Row word: rows read bottom to top, each left to right.
  std::vector<int> row_word() const {
    std::vector<int> out;
    for (int r = shape_.outer.length(); r >= 1; --r)
      for (int c = shape_.inner.part(r) + 1; c <= shape_.outer.part(r); ++c) out.push_back(at({r, c}));
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r) s += " / ";
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        if (c) s += ",";
        s += rows_[r][c] == 0 ? std::string(".") : std::to_string(rows_[r][c]);
      }
    }
    return "[" + s + "]";
  }

  auto operator<=>(const Tableau&) const = default;

 private:
  bool rows_columns_increase(bool rows_strict, bool cols_strict) const {
    for (const Box& b : boxes()) {
      const Box right{b.row, b.col + 1};
      const Box below{b.row + 1, b.col};
      if (shape_.contains(right) && (rows_strict ? at(right) <= at(b) : at(right) < at(b))) return false;
      if (shape_.contains(below) && (cols_strict ? at(below) <= at(b) : at(below) < at(b))) return false;
    }
    return true;
  }

  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

using StandardTableau = Tableau;
using SemistandardTableau = Tableau;

/// Entry i labels the box added at step i.
inline Tableau tableau_from_chain(const YoungChain& chain) {
  const Partition& outer = chain.top();
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= outer.length(); ++r) rows.emplace_back(outer.part(r), 0);
  for (int i = 1; i <= chain.length(); ++i) {
    const Box b = added_box(chain.members[i - 1], chain.members[i]);
    rows[b.row - 1][b.col - 1] = i;
  }
  return Tableau(SkewShape(outer, chain.bottom()), std::move(rows));
}

inline YoungChain chain_from_tableau(const Tableau& t) {
  if (!t.is_standard()) throw Error(ErrorCode::ShapeMismatch, "tableau is not standard: " + t.to_string());
  std::vector<Partition> m{t.shape().inner};
  for (int i = 1; i <= t.size(); ++i) m.push_back(m.back().with_box(*t.find(i)));
  return YoungChain(std::move(m));
}

/// Every standard tableau of a skew shape, in a fixed deterministic order.
inline std::vector<Tableau> all_standard_tableaux(const SkewShape& shape) {
  std::vector<Tableau> out;
  std::vector<Partition> cur{shape.inner};
  auto rec = [&](auto&& self) -> void {
    const Partition last = cur.back();
    if (last == shape.outer) {
      out.push_back(tableau_from_chain(YoungChain(cur)));
      return;
    }
    for (const Box& b : last.addable_boxes()) {
      if (!shape.outer.contains(b)) continue;
      cur.push_back(last.with_box(b));
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

namespace detail {

/// One slide into b; b is removed from the inner shape and the vacated outer box at the end is dropped.
inline Tableau slide_into(const Tableau& t, Box b) {
  const SkewShape& sh = t.shape();
  const Partition inner = sh.inner.without_box(b);
  auto rows = t.rows();
  Box hole = b;
  while (true) {
    const Box right{hole.row, hole.col + 1};
    const Box below{hole.row + 1, hole.col};
    const bool has_r = sh.contains(right) && rows[right.row - 1][right.col - 1] != 0;
    const bool has_b = sh.contains(below) && rows[below.row - 1][below.col - 1] != 0;
    if (!has_r && !has_b) break;
    Box next;
    if (has_r && has_b) next = rows[right.row - 1][right.col - 1] < rows[below.row - 1][below.col - 1] ? right : below;
    else next = has_r ? right : below;
    rows[hole.row - 1][hole.col - 1] = rows[next.row - 1][next.col - 1];
    rows[next.row - 1][next.col - 1] = 0;
    hole = next;
  }
  const Partition outer = sh.outer.without_box(hole);
  rows[hole.row - 1].pop_back();
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return Tableau(SkewShape(outer, inner), std::move(rows));
}

}  // namespace detail

/// Inner corners into which a nontrivial slide is possible.
inline std::vector<Box> slide_boxes(const Tableau& t) {
  std::vector<Box> out;
  for (const Box& b : t.shape().inner.removable_boxes()) {
    if (t.shape().contains({b.row, b.col + 1}) || t.shape().contains({b.row + 1, b.col})) out.push_back(b);
  }
  return out;
}

/// One jeu de taquin slide into an inner corner b sharing its lower or right edge with the skew shape.
inline Tableau jdt_slide(const Tableau& t, Box b) {
  const auto legal = slide_boxes(t);
  if (std::find(legal.begin(), legal.end(), b) == legal.end())
    throw Error(ErrorCode::InvalidBox, "cannot slide into (" + std::to_string(b.row) + "," + std::to_string(b.col) + ") of " + t.shape().to_string());
  return detail::slide_into(t, b);
}

/// Rectification with a caller-chosen inner corner at every step (index into removable inner corners).
inline Tableau rectify_with(Tableau t, const std::function<std::size_t(const std::vector<Box>&)>& choose) {
  while (!t.shape().inner.empty()) {
    const auto corners = t.shape().inner.removable_boxes();
    t = detail::slide_into(t, corners[choose(corners) % corners.size()]);
  }
  return t;
}

/// Straight-shape tableau obtained by jeu de taquin; the slide order does not matter.
inline Tableau rectify(const Tableau& t) {
  return rectify_with(t, [](const std::vector<Box>& c) { return c.size() - 1; });
}

/// Entries 1..|lambda| placed row by row from the top.
inline Tableau special_tableau_P1(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int r = 1; r <= lambda.length(); ++r) {
    rows.emplace_back();
    for (int c = 1; c <= lambda.part(r); ++c) rows.back().push_back(next++);
  }
  return Tableau::straight(std::move(rows));
}

/// Entries |lambda|, ..., 1 placed in passes over the columns from right to left,
/// one entry per pass into the lowest empty cell of each column that still has one.
inline Tableau special_tableau_P2(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= lambda.length(); ++r) rows.emplace_back(lambda.part(r), 0);
  const Partition conj = lambda.conjugate();
  std::vector<int> remaining(conj.parts().begin(), conj.parts().end());
  int next = lambda.size();
  while (next > 0) {
    for (int c = static_cast<int>(remaining.size()); c >= 1; --c) {
      if (remaining[c - 1] == 0) continue;
      rows[remaining[c - 1] - 1][c - 1] = next--;
      --remaining[c - 1];
    }
  }
  return Tableau::straight(std::move(rows));
}

/// j_i = content(box of i) + k with k the number of rows of the outer shape.
inline std::vector<int> content_word(const Tableau& t) {
  const int k = t.shape().outer.length();
  std::vector<int> out;
  for (int i = 1; i <= t.size(); ++i) out.push_back(t.find(i)->content() + k);
  return out;
}

/// The tableau of shape lambda whose row word is `word`, if that filling is row and column strict.
inline std::optional<Tableau> strict_tableau_with_row_word(const std::vector<int>& word, const Partition& lambda) {
  if (static_cast<int>(word.size()) != lambda.size()) return std::nullopt;
  std::vector<std::vector<int>> rows(lambda.length());
  std::size_t pos = 0;
  for (int r = lambda.length(); r >= 1; --r)
    for (int c = 1; c <= lambda.part(r); ++c) rows[r - 1].push_back(word[pos++]);
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c) {
      if (c > 1 && rows[r - 1][c - 1] <= rows[r - 1][c - 2]) return std::nullopt;
      if (r > 1 && rows[r - 1][c - 1] <= rows[r - 2][c - 1]) return std::nullopt;
      if (rows[r - 1][c - 1] < 1) return std::nullopt;
    }
  return Tableau::straight(std::move(rows));
}

namespace detail {
inline void check_lr_shapes(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!nu.contains(mu) || nu.size() != lambda.size() + mu.size())
    throw Error(ErrorCode::ShapeMismatch, "need mu inside nu and |nu| = |lambda| + |mu|");
}
}  // namespace detail

/// Number of standard tableaux of shape nu/mu rectifying to P (a straight tableau of shape lambda).
inline long long lr_count_via_rectification(const Partition& lambda, const Partition& mu, const Partition& nu, const Tableau& p) {
  detail::check_lr_shapes(lambda, mu, nu);
  if (p.shape() != SkewShape(lambda) || !p.is_standard())
    throw Error(ErrorCode::ShapeMismatch, "P must be a standard tableau of shape " + lambda.to_string());
  long long count = 0;
  for (const Tableau& t : all_standard_tableaux(SkewShape(nu, mu)))
    if (rectify(t) == p) ++count;
  return count;
}

/// Number of standard tableaux of shape nu/mu whose content word is the row word of a strict tableau of shape lambda.
inline long long lr_count_via_content_word(const Partition& lambda, const Partition& mu, const Partition& nu) {
  detail::check_lr_shapes(lambda, mu, nu);
  long long count = 0;
  for (const Tableau& t : all_standard_tableaux(SkewShape(nu, mu)))
    if (strict_tableau_with_row_word(content_word(t), lambda)) ++count;
  return count;
}

/// Every prefix has at least as many i's as (i+1)'s.
inline bool is_lattice_word(const std::vector<int>& word) {
  std::map<int, int> seen;
  for (int x : word) {
    if (x < 1) return false;
    ++seen[x];
    if (x > 1 && seen[x] > seen[x - 1]) return false;
  }
  return true;
}

/// Semistandard skew tableau whose reverse row word is a lattice word.
inline bool is_lr_tableau(const Tableau& t) {
  if (!t.is_semistandard()) return false;
  auto w = t.row_word();
  std::reverse(w.begin(), w.end());
  return is_lattice_word(w);
}

/// Place j in row i of the content shape for each entry i in row j of t.
inline Tableau companion_tableau(const Tableau& t) {
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= t.shape().outer.length(); ++r) {
    for (int c = t.shape().inner.part(r) + 1; c <= t.shape().outer.part(r); ++c) {
      const int i = t.at({r, c});
      if (static_cast<int>(rows.size()) < i) rows.resize(i);
      rows[i - 1].push_back(r);
    }
  }
  for (auto& row : rows) std::sort(row.begin(), row.end());
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].size() > rows[i - 1].size())
      throw Error(ErrorCode::ShapeMismatch, "content of " + t.to_string() + " is not a partition");
  return Tableau::straight(std::move(rows));
}

/// Fomin's growth diagram for jeu de taquin: grid[i][j] for i = 0..|T|, j = 0..|S|.
/// Left column is the chain of S (empty -> mu), top row the chain of T (mu -> nu).
inline std::vector<std::vector<Partition>> fomin_fill(const YoungChain& s, const YoungChain& t) {
  if (!s.bottom().empty() || s.top() != t.bottom())
    throw Error(ErrorCode::BoundaryMismatch, "S must run from the empty partition to the inner shape of T");
  const int p = t.length();
  const int q = s.length();
  std::vector<std::vector<Partition>> grid(p + 1, std::vector<Partition>(q + 1));
  for (int j = 0; j <= q; ++j) grid[0][j] = s.members[j];
  for (int i = 0; i <= p; ++i) grid[i][q] = t.members[i];
  for (int j = q - 1; j >= 0; --j) {
    for (int i = 0; i < p; ++i) {
      const Partition& low = grid[i][j];
      const Partition& mid = grid[i][j + 1];
      const Partition& high = grid[i + 1][j + 1];
      const Box b1 = added_box(low, mid);
      const Box b2 = added_box(mid, high);
      const bool adjacent = (b1.row == b2.row && std::abs(b1.col - b2.col) == 1) || (b1.col == b2.col && std::abs(b1.row - b2.row) == 1);
      grid[i + 1][j] = adjacent ? mid : low.with_box(b2);
    }
  }
  return grid;
}

}  // namespace bruhat_taquin
