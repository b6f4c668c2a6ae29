#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bruhat_taquin/error.hpp"
#include "bruhat_taquin/partition.hpp"

namespace bruhat_taquin {

/// Permutation of {1..n} in one-line notation. Positions and values are 1-indexed.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (int x : word_) {
      if (x < 1 || x > size() || seen[x])
        throw Error(ErrorCode::InvalidPermutation, "not a permutation of 1.." + std::to_string(size()));
      seen[x] = true;
    }
  }

  Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  static Permutation longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
  }

  /// One-line notation: "2413", or comma separated ("1,2,...,10") when n > 9.
  static Permutation parse(std::string_view text) {
    std::vector<int> w;
    if (text.find(',') != std::string_view::npos || text.find(' ') != std::string_view::npos) {
      int cur = -1;
      for (char c : text) {
        if (c >= '0' && c <= '9') {
          cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
        } else if (c == ',' || c == ' ') {
          if (cur >= 0) w.push_back(cur);
          cur = -1;
        } else {
          throw Error(ErrorCode::ParseError, "bad character in permutation '" + std::string(text) + "'");
        }
      }
      if (cur >= 0) w.push_back(cur);
    } else {
      for (char c : text) {
        if (c < '1' || c > '9') throw Error(ErrorCode::ParseError, "bad permutation '" + std::string(text) + "'");
        w.push_back(c - '0');
      }
    }
    if (w.empty()) throw Error(ErrorCode::ParseError, "empty permutation");
    try {
      return Permutation(std::move(w));
    } catch (const Error&) {
      throw Error(ErrorCode::ParseError, "'" + std::string(text) + "' is not a permutation");
    }
  }

  int size() const { return static_cast<int>(word_.size()); }
  std::span<const int> word() const { return word_; }

  /// Value at 1-indexed position.
  int operator()(int pos) const { return word_[pos - 1]; }

  /// Position (1-indexed) of a value.
  int position_of(int value) const {
    for (int i = 0; i < size(); ++i)
      if (word_[i] == value) return i + 1;
    throw Error(ErrorCode::InvalidPermutation, "value " + std::to_string(value) + " not present");
  }

  Permutation inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 0; i < size(); ++i) inv[word_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (word_[i] != i + 1) return false;
    return true;
  }

  /// Exchange the entries in two positions (right multiplication by a position transposition).
  Permutation swap_positions(int a, int b) const {
    Permutation out = *this;
    std::swap(out.word_[a - 1], out.word_[b - 1]);
    return out;
  }

  std::string to_string() const {
    std::string s;
    const bool wide = size() > 9;
    for (int i = 0; i < size(); ++i) {
      if (wide && i) s += ',';
      s += std::to_string(word_[i]);
    }
    return s;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

/// Composition (p * q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::SizeMismatch, "compose: sizes differ");
  std::vector<int> w(p.size());
  for (int i = 1; i <= p.size(); ++i) w[i - 1] = p(q(i));
  return Permutation(std::move(w));
}

/// Transposition of the VALUES a < b; acts on permutations by left multiplication.
struct Transposition {
  int a = 0;
  int b = 0;

  Transposition() = default;
  Transposition(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {
    if (x == y || a < 1) throw Error(ErrorCode::InvalidTransposition, "bad transposition " + std::to_string(x) + "_" + std::to_string(y));
  }

  bool disjoint(const Transposition& o) const { return a != o.a && a != o.b && b != o.a && b != o.b; }

  std::string to_string() const { return std::to_string(a) + "_" + std::to_string(b); }

  static Transposition parse(std::string_view text) {
    const auto us = text.find('_');
    if (us == std::string_view::npos || us == 0 || us + 1 == text.size())
      throw Error(ErrorCode::ParseError, "transposition must look like a_b: '" + std::string(text) + "'");
    auto num = [&](std::string_view s) {
      int v = 0;
      for (char c : s) {
        if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "bad transposition '" + std::string(text) + "'");
        v = v * 10 + (c - '0');
      }
      return v;
    };
    const int a = num(text.substr(0, us)), b = num(text.substr(us + 1));
    if (a >= b) throw Error(ErrorCode::ParseError, "transposition needs a < b: '" + std::string(text) + "'");
    try {
      return Transposition(a, b);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      throw Error(ErrorCode::ParseError, "bad transposition '" + std::string(text) + "'");
    }
  }

  auto operator<=>(const Transposition&) const = default;
};

/// Left multiplication by a value transposition: the positions of values t.a and t.b are exchanged.
inline Permutation apply_value_transposition(const Permutation& p, Transposition t) {
  if (t.b > p.size()) throw Error(ErrorCode::SizeMismatch, "transposition " + t.to_string() + " outside S_" + std::to_string(p.size()));
  return p.swap_positions(p.position_of(t.a), p.position_of(t.b));
}

inline int length(const Permutation& p) {
  int inv = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p(i) > p(j)) ++inv;
  return inv;
}

/// Positions i with p(i) > p(i+1).
inline std::vector<int> descents(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) out.push_back(i);
  return out;
}

/// Positions i with p(i) < p(i+1).
inline std::vector<int> ascents(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) < p(i + 1)) out.push_back(i);
  return out;
}

/// Cover condition for exchanging positions a < b: p(a) < p(b) and no intermediate value lies between them.
inline bool satisfies_cover_condition(const Permutation& p, int a, int b) {
  if (a >= b || p(a) >= p(b)) return false;
  for (int c = a + 1; c < b; ++c)
    if (p(c) > p(a) && p(c) < p(b)) return false;
  return true;
}

struct CoverEdge {
  Permutation from;
  Permutation to;
  int pos_a = 0;
  int pos_b = 0;
  Transposition values;
  int column = 0;

  auto operator<=>(const CoverEdge&) const = default;
};

/// Up covers of p in Bruhat order; restricted to a <= k < b when k is given.
/// Without k, the edge's column is its smaller position.
inline std::vector<CoverEdge> bruhat_up_covers(const Permutation& p, std::optional<int> k = std::nullopt) {
  std::vector<CoverEdge> out;
  const int n = p.size();
  for (int a = 1; a <= n; ++a) {
    if (k && a > *k) break;
    for (int b = std::max(a + 1, k ? *k + 1 : a + 1); b <= n; ++b) {
      if (!satisfies_cover_condition(p, a, b)) continue;
      out.push_back({p, p.swap_positions(a, b), a, b, Transposition(p(a), p(b)), k ? *k : a});
    }
  }
  return out;
}

/// Down covers q of p, i.e. q with p an up cover of q; same column convention.
inline std::vector<CoverEdge> bruhat_down_covers(const Permutation& p, std::optional<int> k = std::nullopt) {
  std::vector<CoverEdge> out;
  const int n = p.size();
  for (int a = 1; a <= n; ++a) {
    if (k && a > *k) break;
    for (int b = std::max(a + 1, k ? *k + 1 : a + 1); b <= n; ++b) {
      if (p(a) <= p(b)) continue;
      Permutation q = p.swap_positions(a, b);
      if (!satisfies_cover_condition(q, a, b)) continue;
      out.push_back({q, p, a, b, Transposition(q(a), q(b)), k ? *k : a});
    }
  }
  return out;
}

/// Position pair (a < b) where two permutations differ by a single exchange, if they do.
inline std::optional<std::pair<int, int>> exchanged_positions(const Permutation& from, const Permutation& to) {
  if (from.size() != to.size()) return std::nullopt;
  int a = 0, b = 0, diffs = 0;
  for (int i = 1; i <= from.size(); ++i) {
    if (from(i) != to(i)) {
      ++diffs;
      if (diffs == 1) a = i;
      else if (diffs == 2) b = i;
      else return std::nullopt;
    }
  }
  if (diffs != 2 || from(a) != to(b) || from(b) != to(a)) return std::nullopt;
  return std::make_pair(a, b);
}

/// True iff `to` covers `from` in Bruhat order (column-restricted when k is given).
inline bool is_cover(const Permutation& from, const Permutation& to, std::optional<int> k = std::nullopt) {
  auto pos = exchanged_positions(from, to);
  if (!pos) return false;
  auto [a, b] = *pos;
  if (k && !(a <= *k && *k < b)) return false;
  return satisfies_cover_condition(from, a, b);
}

/// The value transposition t with to = t * from.
inline Transposition transposition_between(const Permutation& from, const Permutation& to) {
  auto pos = exchanged_positions(from, to);
  if (!pos) throw Error(ErrorCode::InvalidChain, from.to_string() + " and " + to.to_string() + " do not differ by a transposition");
  return Transposition(from(pos->first), from(pos->second));
}

/// At most one descent, located at k (the identity qualifies for every k).
inline bool is_grassmannian(const Permutation& p, int k) {
  for (int d : descents(p))
    if (d != k) return false;
  return true;
}

/// Partition (p(k)-k, ..., p(1)-1) of a Grassmannian permutation with descent at k.
inline Partition grassmannian_to_partition(const Permutation& p, int k) {
  if (k < 1 || k > p.size() || !is_grassmannian(p, k))
    throw Error(ErrorCode::NotGrassmannian, p.to_string() + " has a descent other than " + std::to_string(k));
  std::vector<int> parts;
  for (int i = k; i >= 1; --i) parts.push_back(p(i) - i);
  return Partition(std::move(parts));
}

/// The Grassmannian permutation of S_n with descent at k (or none) corresponding to lambda.
inline Permutation partition_to_grassmannian(const Partition& lambda, int k, int n) {
  if (k < 1 || k > n || lambda.length() > k || lambda.part(1) > n - k)
    throw Error(ErrorCode::InvalidPartition, lambda.to_string() + " does not fit in a " + std::to_string(k) + "x" + std::to_string(n - k) + " box");
  std::vector<int> w(n);
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= k; ++i) {
    w[i - 1] = lambda.part(k + 1 - i) + i;
    used[w[i - 1]] = true;
  }
  int next = 1;
  for (int i = k + 1; i <= n; ++i) {
    while (used[next]) ++next;
    w[i - 1] = next++;
  }
  return Permutation(std::move(w));
}

/// No descent at any position strictly greater than k.
inline bool is_k_semi_shuffle(const Permutation& p, int k) {
  for (int d : descents(p))
    if (d > k) return false;
  return true;
}

/// No descent at any position strictly smaller than k.
inline bool has_no_descents_before(const Permutation& p, int k) {
  for (int d : descents(p))
    if (d < k) return false;
  return true;
}

/// w0 * p * w0.
inline Permutation conjugate_by_w0(const Permutation& p) {
  const int n = p.size();
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = n + 1 - p(n + 1 - i);
  return Permutation(std::move(w));
}

/// Image of a value transposition under conjugation by w0 in S_n.
inline Transposition conjugate_by_w0(Transposition t, int n) { return Transposition(n + 1 - t.b, n + 1 - t.a); }

/// The same permutation viewed in S_m, m >= n, fixing n+1..m.
inline Permutation embed(const Permutation& p, int m) {
  if (m < p.size()) throw Error(ErrorCode::SizeMismatch, "cannot embed S_" + std::to_string(p.size()) + " into S_" + std::to_string(m));
  std::vector<int> w(p.word().begin(), p.word().end());
  for (int i = p.size() + 1; i <= m; ++i) w.push_back(i);
  return Permutation(std::move(w));
}

/// Drop trailing fixed points (keeps at least one letter).
inline Permutation trimmed(const Permutation& p) {
  int n = p.size();
  while (n > 1 && p(n) == n) --n;
  std::vector<int> w(p.word().begin(), p.word().begin() + n);
  return Permutation(std::move(w));
}

/// Smallest i with p(i) != i; 0 for the identity.
inline int smallest_non_fixed_point(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) != i) return i;
  return 0;
}

/// Largest i with p(i) != i; 0 for the identity.
inline int largest_non_fixed_point(const Permutation& p) {
  for (int i = p.size(); i >= 1; --i)
    if (p(i) != i) return i;
  return 0;
}

/// All of S_n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Lehmer code: c_i = #{j > i : p(j) < p(i)}.
inline std::vector<int> lehmer_code(const Permutation& p) {
  std::vector<int> code(p.size(), 0);
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p(j) < p(i)) ++code[i - 1];
  return code;
}

/// Inverse of lehmer_code; the result lives in the smallest S_n that can hold the code (at least `min_size`).
inline Permutation from_lehmer_code(std::span<const int> code, int min_size = 1) {
  int n = std::max<int>(min_size, static_cast<int>(code.size()));
  for (std::size_t i = 0; i < code.size(); ++i)
    if (code[i] > 0) n = std::max(n, static_cast<int>(i) + 1 + code[i]);
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> w;
  for (int i = 0; i < n; ++i) {
    const int c = i < static_cast<int>(code.size()) ? code[i] : 0;
    if (c < 0 || c >= static_cast<int>(pool.size())) throw Error(ErrorCode::InvalidPermutation, "invalid Lehmer code");
    w.push_back(pool[c]);
    pool.erase(pool.begin() + c);
  }
  return Permutation(std::move(w));
}

}  // namespace bruhat_taquin
