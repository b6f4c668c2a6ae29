#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bruhat_taquin/error.hpp"
#include "bruhat_taquin/permutation.hpp"

namespace bruhat_taquin {

/// One step of a chain word: left multiplication by `t`, a Bruhat cover straddling `column`.
struct ChainStep {
  Transposition t;
  int column = 0;
  auto operator<=>(const ChainStep&) const = default;
};

/// Saturated chain in (mixed) k-Bruhat order, stored as a base permutation and a word of transpositions.
class ChainWord {
 public:
  ChainWord() : perms_{Permutation()} {}

  ChainWord(Permutation base, std::vector<ChainStep> steps) : base_(std::move(base)), steps_(std::move(steps)) {
    perms_.reserve(steps_.size() + 1);
    perms_.push_back(base_);
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      const auto& s = steps_[i];
      const Permutation& cur = perms_.back();
      if (s.t.b > cur.size())
        throw Error(ErrorCode::InvalidChain, "step " + std::to_string(i + 1) + " (" + s.t.to_string() + ") leaves S_" + std::to_string(cur.size()));
      Permutation next = apply_value_transposition(cur, s.t);
      if (!is_cover(cur, next, s.column))
        throw Error(ErrorCode::InvalidChain, "step " + std::to_string(i + 1) + " (" + s.t.to_string() + "@" + std::to_string(s.column) +
                                                 ") is not a " + std::to_string(s.column) + "-Bruhat cover of " + cur.to_string());
      perms_.push_back(std::move(next));
    }
  }

  /// Chain whose steps all use column k.
  static ChainWord pure(Permutation base, const std::vector<Transposition>& word, int k) {
    std::vector<ChainStep> steps;
    for (const auto& t : word) steps.push_back({t, k});
    return ChainWord(std::move(base), std::move(steps));
  }

  /// Chain through the given permutations, each step using the given column.
  static ChainWord through(const std::vector<Permutation>& perms, const std::vector<int>& columns) {
    std::vector<ChainStep> steps;
    for (std::size_t i = 1; i < perms.size(); ++i) steps.push_back({transposition_between(perms[i - 1], perms[i]), columns[i - 1]});
    return ChainWord(perms.front(), std::move(steps));
  }

  const Permutation& base() const { return base_; }
  const Permutation& top() const { return perms_.back(); }
  const std::vector<ChainStep>& steps() const { return steps_; }
  const std::vector<Permutation>& permutations() const { return perms_; }
  int length() const { return static_cast<int>(steps_.size()); }
  int size() const { return base_.size(); }

  std::vector<Transposition> word() const {
    std::vector<Transposition> out;
    for (const auto& s : steps_) out.push_back(s.t);
    return out;
  }

  std::vector<int> columns() const {
    std::vector<int> out;
    for (const auto& s : steps_) out.push_back(s.column);
    return out;
  }

  bool is_pure(int k) const {
    return std::all_of(steps_.begin(), steps_.end(), [k](const ChainStep& s) { return s.column == k; });
  }

  ChainWord prefix(int m) const { return ChainWord(base_, std::vector<ChainStep>(steps_.begin(), steps_.begin() + m)); }

  ChainWord suffix_from(int m) const { return ChainWord(perms_[m], std::vector<ChainStep>(steps_.begin() + m, steps_.end())); }

  ChainWord then(const ChainWord& rest) const {
    if (rest.base() != top()) throw Error(ErrorCode::InvalidChain, "concatenation endpoints differ");
    auto s = steps_;
    s.insert(s.end(), rest.steps_.begin(), rest.steps_.end());
    return ChainWord(base_, std::move(s));
  }

  /// Word notation "1_4 2_3".
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (i) s += " ";
      s += steps_[i].t.to_string();
    }
    return s;
  }

  /// Word notation with columns, "2_4@1 1_2@2".
  std::string to_string_with_columns() const {
    std::string s;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (i) s += " ";
      s += steps_[i].t.to_string() + "@" + std::to_string(steps_[i].column);
    }
    return s;
  }

  friend bool operator==(const ChainWord& a, const ChainWord& b) { return a.base_ == b.base_ && a.steps_ == b.steps_; }
  friend auto operator<=>(const ChainWord& a, const ChainWord& b) {
    if (auto c = a.base_ <=> b.base_; c != 0) return c;
    return a.steps_ <=> b.steps_;
  }

 private:
  Permutation base_;
  std::vector<ChainStep> steps_;
  std::vector<Permutation> perms_;
};

/// Parse "1_2 2_3" (all steps in column k) or "2_4@1 1_2@2" (per-step columns).
inline ChainWord parse_chain(const Permutation& base, std::string_view text, std::optional<int> k = std::nullopt) {
  std::vector<ChainStep> steps;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != ',') ++j;
    std::string_view tok = text.substr(i, j - i);
    const auto at = tok.find('@');
    int column;
    if (at != std::string_view::npos) {
      column = 0;
      for (char c : tok.substr(at + 1)) {
        if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "bad column in '" + std::string(tok) + "'");
        column = column * 10 + (c - '0');
      }
      tok = tok.substr(0, at);
    } else {
      if (!k) throw Error(ErrorCode::ParseError, "step '" + std::string(tok) + "' needs a column (a_b@l) or a chain-wide k");
      column = *k;
    }
    steps.push_back({Transposition::parse(tok), column});
    i = j;
  }
  return ChainWord(base, std::move(steps));
}

struct BruhatInterval {
  Permutation v;
  Permutation w;
  int k = 0;

  auto operator<=>(const BruhatInterval&) const = default;
};

/// Elements x with v <=_k x <=_k w; empty when v is not below w.
inline std::set<Permutation> interval_elements(const BruhatInterval& I) {
  if (I.v.size() != I.w.size()) throw Error(ErrorCode::SizeMismatch, "interval endpoints live in different symmetric groups");
  const int top_len = length(I.w);
  std::set<Permutation> up{I.v};
  std::vector<Permutation> frontier{I.v};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      if (length(x) >= top_len) continue;
      for (const auto& e : bruhat_up_covers(x, I.k))
        if (up.insert(e.to).second) next.push_back(e.to);
    }
    frontier = std::move(next);
  }
  if (!up.count(I.w)) return {};
  const int bottom_len = length(I.v);
  std::set<Permutation> down{I.w};
  frontier = {I.w};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      if (length(x) <= bottom_len) continue;
      for (const auto& e : bruhat_down_covers(x, I.k))
        if (up.count(e.from) && down.insert(e.from).second) next.push_back(e.from);
    }
    frontier = std::move(next);
  }
  return down;
}

inline bool is_nonempty(const BruhatInterval& I) { return !interval_elements(I).empty(); }

/// All w with v <=_k w.
inline std::vector<Permutation> upper_set(const Permutation& v, int k) {
  std::set<Permutation> seen{v};
  std::vector<Permutation> frontier{v};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& e : bruhat_up_covers(x, k))
        if (seen.insert(e.to).second) next.push_back(e.to);
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Every saturated chain from v to w using column-k covers only.
inline std::vector<ChainWord> enumerate_maximal_chains(const BruhatInterval& I) {
  const auto elems = interval_elements(I);
  std::vector<ChainWord> out;
  if (elems.empty()) return out;
  std::vector<ChainStep> steps;
  auto rec = [&](auto&& self, const Permutation& x) -> void {
    if (x == I.w) {
      out.emplace_back(I.v, steps);
      return;
    }
    for (const auto& e : bruhat_up_covers(x, I.k)) {
      if (!elems.count(e.to)) continue;
      steps.push_back({e.values, I.k});
      self(self, e.to);
      steps.pop_back();
    }
  };
  rec(rec, I.v);
  return out;
}

/// Number of maximal chains, by dynamic programming over the interval.
inline long long count_maximal_chains(const BruhatInterval& I) {
  const auto elems = interval_elements(I);
  if (elems.empty()) return 0;
  std::vector<Permutation> order(elems.begin(), elems.end());
  std::sort(order.begin(), order.end(), [](const Permutation& a, const Permutation& b) { return length(a) > length(b); });
  std::map<Permutation, long long> ways;
  for (const auto& x : order) {
    if (x == I.w) {
      ways[x] = 1;
      continue;
    }
    long long total = 0;
    for (const auto& e : bruhat_up_covers(x, I.k))
      if (elems.count(e.to)) total += ways[e.to];
    ways[x] = total;
  }
  return ways[I.v];
}

/// alpha_delta beta_gamma or beta_gamma alpha_delta with alpha < beta < gamma < delta.
inline bool is_nested_pair(Transposition first, Transposition second) {
  auto nested = [](Transposition outer, Transposition inner) { return outer.a < inner.a && inner.b < outer.b; };
  return nested(first, second) || nested(second, first);
}

/// Some maximal chain of I contains a nested consecutive pair. Every x < y < z path inside the
/// interval extends to a maximal chain, so it suffices to scan length-2 paths.
inline bool has_nesting(const BruhatInterval& I) {
  const auto elems = interval_elements(I);
  for (const auto& x : elems)
    for (const auto& e1 : bruhat_up_covers(x, I.k)) {
      if (!elems.count(e1.to)) continue;
      for (const auto& e2 : bruhat_up_covers(e1.to, I.k))
        if (elems.count(e2.to) && is_nested_pair(e1.values, e2.values)) return true;
    }
  return false;
}

/// Reference implementation of has_nesting that scans every maximal chain.
inline bool has_nesting_by_chains(const BruhatInterval& I) {
  for (const auto& c : enumerate_maximal_chains(I)) {
    const auto& s = c.steps();
    for (std::size_t i = 1; i < s.size(); ++i)
      if (is_nested_pair(s[i - 1].t, s[i].t)) return true;
  }
  return false;
}

/// Which of the one-sided non-nesting criteria hold:
/// 1: v has no descents after k; 2: v has no descents before k;
/// 3: w has no ascents after k; 4: w has no ascents before k.
inline std::set<int> nonnesting_criteria(const BruhatInterval& I) {
  std::set<int> out;
  if (is_k_semi_shuffle(I.v, I.k)) out.insert(1);
  if (has_no_descents_before(I.v, I.k)) out.insert(2);
  const auto asc = ascents(I.w);
  if (std::none_of(asc.begin(), asc.end(), [&](int a) { return a > I.k; })) out.insert(3);
  if (std::none_of(asc.begin(), asc.end(), [&](int a) { return a < I.k; })) out.insert(4);
  return out;
}

/// For a consecutive pair alpha_beta gamma_delta: (alpha < gamma) <=> (beta < delta) <=> (beta <= gamma).
inline bool simplelem_holds(Transposition first, Transposition second) {
  const bool i = first.a < second.a;
  const bool ii = first.b < second.b;
  const bool iii = first.b <= second.a;
  return i == ii && ii == iii;
}

/// Checks the pair equivalences on every consecutive pair of every maximal chain of a non-nesting interval.
inline bool check_simplelem(const BruhatInterval& I) {
  if (has_nesting(I)) throw Error(ErrorCode::PreconditionViolated, "interval contains nesting");
  const auto elems = interval_elements(I);
  for (const auto& x : elems)
    for (const auto& e1 : bruhat_up_covers(x, I.k)) {
      if (!elems.count(e1.to)) continue;
      for (const auto& e2 : bruhat_up_covers(e1.to, I.k))
        if (elems.count(e2.to) && !simplelem_holds(e1.values, e2.values)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Auxiliary chains from the identity: properties (PL), (PR) and (PLR).

/// (PL): every member is a k-semi-shuffle; the step v_i -> v_{i+1} exchanges positions (l, b)
/// with l the smallest non-fixed point of v_{i+1}, and uses column l.
inline bool has_property_PL(const ChainWord& delta, int k) {
  if (!delta.base().is_identity()) return false;
  const auto& perms = delta.permutations();
  for (const auto& p : perms)
    if (!is_k_semi_shuffle(p, k)) return false;
  for (int i = 0; i < delta.length(); ++i) {
    const auto pos = exchanged_positions(perms[i], perms[i + 1]);
    const int l = smallest_non_fixed_point(perms[i + 1]);
    if (!pos || pos->first != l || delta.steps()[i].column != l) return false;
  }
  return true;
}

/// (PR): no member has a descent before k; the step exchanges positions (a, l) with l the
/// largest non-fixed point of v_{i+1}, and uses column l - 1.
inline bool has_property_PR(const ChainWord& delta, int k) {
  if (!delta.base().is_identity()) return false;
  const auto& perms = delta.permutations();
  for (const auto& p : perms)
    if (!has_no_descents_before(p, k)) return false;
  for (int i = 0; i < delta.length(); ++i) {
    const auto pos = exchanged_positions(perms[i], perms[i + 1]);
    const int l = largest_non_fixed_point(perms[i + 1]);
    if (!pos || pos->second != l || delta.steps()[i].column != l - 1) return false;
  }
  return true;
}

enum class PlrForm {
  PLThenRight,  // Delta' Delta'': (PL) part, then columns k+1..n-1 exchanging (., l+1)
  PRThenLeft,   // Delta'' Delta': (PR) part, then columns k..1 exchanging (l, .)
};

inline std::string to_string(PlrForm f) { return f == PlrForm::PLThenRight ? "PL+right" : "PR+left"; }

namespace detail {

/// Columns in [lo, hi], monotone in the given direction, with the exchanged position tied to the column.
inline bool is_tail_segment(const ChainWord& c, int from, int lo, int hi, bool ascending, bool tie_right) {
  const auto& perms = c.permutations();
  int prev = ascending ? lo : hi;
  for (int i = from; i < c.length(); ++i) {
    const int col = c.steps()[i].column;
    if (col < lo || col > hi) return false;
    if (ascending ? col < prev : col > prev) return false;
    prev = col;
    const auto pos = exchanged_positions(perms[i], perms[i + 1]);
    if (!pos) return false;
    if (tie_right ? pos->second != col + 1 : pos->first != col) return false;
  }
  return true;
}

}  // namespace detail

/// The decomposition(s) under which delta has property (PLR).
inline std::vector<PlrForm> plr_forms(const ChainWord& delta, int k) {
  std::vector<PlrForm> out;
  const int n = delta.size();
  bool left = false, right = false;
  for (int split = 0; split <= delta.length(); ++split) {
    if (!left && has_property_PL(delta.prefix(split), k) && detail::is_tail_segment(delta, split, k + 1, n - 1, true, true)) left = true;
    if (!right && has_property_PR(delta.prefix(split), k) && detail::is_tail_segment(delta, split, 1, k, false, false)) right = true;
  }
  if (left) out.push_back(PlrForm::PLThenRight);
  if (right) out.push_back(PlrForm::PRThenLeft);
  return out;
}

inline bool has_property_PLR(const ChainWord& delta, int k) { return !plr_forms(delta, k).empty(); }

namespace detail {

/// Downward search from v to the identity. `moves(cur)` yields candidate predecessors with the
/// column of the step; `visit` receives each completed chain (as steps from the identity).
template <class Moves, class Visit>
void descend_to_identity(const Permutation& v, Moves&& moves, Visit&& visit) {
  std::vector<std::pair<Permutation, int>> stack_steps;  // (upper permutation, column), top first
  auto rec = [&](auto&& self, const Permutation& cur) -> bool {
    if (cur.is_identity()) {
      std::vector<Permutation> perms{cur};
      std::vector<int> cols;
      for (auto it = stack_steps.rbegin(); it != stack_steps.rend(); ++it) {
        perms.push_back(it->first);
        cols.push_back(it->second);
      }
      return visit(ChainWord::through(perms, cols));
    }
    for (auto& [prev, col] : moves(cur)) {
      stack_steps.emplace_back(cur, col);
      const bool stop = self(self, prev);
      stack_steps.pop_back();
      if (stop) return true;
    }
    return false;
  };
  rec(rec, v);
}

inline std::vector<std::pair<Permutation, int>> pl_moves(const Permutation& cur, int k) {
  std::vector<std::pair<Permutation, int>> out;
  const int l = smallest_non_fixed_point(cur);
  for (int b = l + 1; b <= cur.size(); ++b) {
    if (cur(l) < cur(b)) continue;
    Permutation prev = cur.swap_positions(l, b);
    if (satisfies_cover_condition(prev, l, b) && is_k_semi_shuffle(prev, k)) out.emplace_back(std::move(prev), l);
  }
  return out;
}

inline std::vector<std::pair<Permutation, int>> pr_moves(const Permutation& cur, int k) {
  std::vector<std::pair<Permutation, int>> out;
  const int l = largest_non_fixed_point(cur);
  for (int a = 1; a < l; ++a) {
    if (cur(a) < cur(l)) continue;
    Permutation prev = cur.swap_positions(a, l);
    if (satisfies_cover_condition(prev, a, l) && has_no_descents_before(prev, k)) out.emplace_back(std::move(prev), l - 1);
  }
  return out;
}

}  // namespace detail

/// Every (PL) chain from the identity to v (empty unless v is a k-semi-shuffle).
inline std::vector<ChainWord> enumerate_PL_chains(const Permutation& v, int k, std::size_t limit = 0) {
  std::vector<ChainWord> out;
  if (!is_k_semi_shuffle(v, k)) return out;
  detail::descend_to_identity(
      v, [k](const Permutation& c) { return detail::pl_moves(c, k); },
      [&](ChainWord c) {
        out.push_back(std::move(c));
        return limit && out.size() >= limit;
      });
  return out;
}

/// Every (PR) chain from the identity to v (empty unless v has no descents before k).
inline std::vector<ChainWord> enumerate_PR_chains(const Permutation& v, int k, std::size_t limit = 0) {
  std::vector<ChainWord> out;
  if (!has_no_descents_before(v, k)) return out;
  detail::descend_to_identity(
      v, [k](const Permutation& c) { return detail::pr_moves(c, k); },
      [&](ChainWord c) {
        out.push_back(std::move(c));
        return limit && out.size() >= limit;
      });
  return out;
}

inline ChainWord build_PL_chain(const Permutation& v, int k) {
  auto c = enumerate_PL_chains(v, k, 1);
  if (c.empty()) throw Error(ErrorCode::NoChainFound, "no (PL) chain to " + v.to_string() + " for k=" + std::to_string(k));
  return c.front();
}

inline ChainWord build_PR_chain(const Permutation& v, int k) {
  auto c = enumerate_PR_chains(v, k, 1);
  if (c.empty()) throw Error(ErrorCode::NoChainFound, "no (PR) chain to " + v.to_string() + " for k=" + std::to_string(k));
  return c.front();
}

namespace detail {

/// Descend from v through tail steps, handing each reachable switch point to `finish`.
/// For the PL+right form the tail uses columns k+1..n-1 exchanging (a, col+1), columns
/// non-decreasing upward; for PR+left it uses columns 1..k exchanging (col, b), non-increasing upward.
template <class Finish>
void descend_tail(const Permutation& v, int k, PlrForm form, Finish&& finish) {
  const int n = v.size();
  std::vector<std::pair<Permutation, int>> tail;  // (upper permutation, column), top first
  auto rec = [&](auto&& self, const Permutation& cur, int bound) -> bool {
    std::vector<ChainStep> tail_steps;
    {
      std::vector<Permutation> perms{cur};
      std::vector<int> cols;
      for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
        perms.push_back(it->first);
        cols.push_back(it->second);
      }
      if (finish(ChainWord::through(perms, cols))) return true;
    }
    if (form == PlrForm::PLThenRight) {
      for (int col = std::min(bound, n - 1); col >= k + 1; --col) {
        const int b = col + 1;
        for (int a = 1; a <= col; ++a) {
          if (cur(a) < cur(b)) continue;
          Permutation prev = cur.swap_positions(a, b);
          if (!satisfies_cover_condition(prev, a, b)) continue;
          tail.emplace_back(cur, col);
          const bool stop = self(self, prev, col);
          tail.pop_back();
          if (stop) return true;
        }
      }
    } else {
      for (int col = std::max(bound, 1); col <= k; ++col) {
        const int a = col;
        for (int b = col + 1; b <= n; ++b) {
          if (cur(a) < cur(b)) continue;
          Permutation prev = cur.swap_positions(a, b);
          if (!satisfies_cover_condition(prev, a, b)) continue;
          tail.emplace_back(cur, col);
          const bool stop = self(self, prev, col);
          tail.pop_back();
          if (stop) return true;
        }
      }
    }
    return false;
  };
  rec(rec, v, form == PlrForm::PLThenRight ? n - 1 : 1);
}

}  // namespace detail

/// Every (PLR) chain from the identity to v, both decompositions, without duplicates.
inline std::vector<ChainWord> enumerate_PLR_chains(const Permutation& v, int k, std::size_t limit = 0) {
  std::set<ChainWord> seen;
  std::vector<ChainWord> out;
  for (PlrForm form : {PlrForm::PLThenRight, PlrForm::PRThenLeft}) {
    bool done = false;
    detail::descend_tail(v, k, form, [&](const ChainWord& tail) {
      const auto heads = form == PlrForm::PLThenRight ? enumerate_PL_chains(tail.base(), k) : enumerate_PR_chains(tail.base(), k);
      for (const auto& head : heads) {
        ChainWord c = head.then(tail);
        if (seen.insert(c).second) {
          out.push_back(std::move(c));
          if (limit && out.size() >= limit) {
            done = true;
            return true;
          }
        }
      }
      return false;
    });
    if (done) break;
  }
  return out;
}

struct PlrBuild {
  ChainWord chain;
  PlrForm form;
  bool pl_then_right_exists = false;
  bool pr_then_left_exists = false;
};

/// A (PLR) chain to v: the PL+right decomposition is tried first (shortest tail first), then PR+left.
inline PlrBuild build_PLR_chain(const Permutation& v, int k) {
  std::optional<ChainWord> found[2];
  int idx = 0;
  for (PlrForm form : {PlrForm::PLThenRight, PlrForm::PRThenLeft}) {
    detail::descend_tail(v, k, form, [&](const ChainWord& tail) {
      const auto heads = form == PlrForm::PLThenRight ? enumerate_PL_chains(tail.base(), k, 1) : enumerate_PR_chains(tail.base(), k, 1);
      if (heads.empty()) return false;
      found[idx] = heads.front().then(tail);
      return true;
    });
    ++idx;
  }
  if (!found[0] && !found[1]) throw Error(ErrorCode::NoChainFound, "no (PLR) chain to " + v.to_string() + " for k=" + std::to_string(k));
  const bool left = found[0].has_value();
  return {left ? *found[0] : *found[1], left ? PlrForm::PLThenRight : PlrForm::PRThenLeft, left, found[1].has_value()};
}

}  // namespace bruhat_taquin
