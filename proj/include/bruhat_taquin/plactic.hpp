#pragma once

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bruhat_taquin/chains.hpp"
#include "bruhat_taquin/error.hpp"
#include "bruhat_taquin/partition.hpp"
#include "bruhat_taquin/permutation.hpp"
#include "bruhat_taquin/young.hpp"

namespace bruhat_taquin {

enum class KbRule { KB1, KB2, KB3, KB4 };

inline std::string to_string(KbRule r) {
  switch (r) {
    case KbRule::KB1: return "KB1";
    case KbRule::KB2: return "KB2";
    case KbRule::KB3: return "KB3";
    case KbRule::KB4: return "KB4";
  }
  return "?";
}

/// A three-letter window rewritten by one plactic relation. `forward` is left-to-right as displayed.
struct KbMatch {
  KbRule rule;
  bool forward = true;
  std::array<Transposition, 3> result;
  // Named letters of the relation (alpha < beta < ... in the displayed order); unused ones are 0.
  int alpha = 0, beta = 0, gamma = 0, delta = 0;
};

/// All single applications of KB1-KB4 (either direction) to a word x y z, without chain validation.
inline std::vector<KbMatch> kb_matches(Transposition x, Transposition y, Transposition z) {
  using T = Transposition;
  std::vector<KbMatch> out;
  // KB1: alpha_gamma gamma_delta beta_gamma ~ beta_gamma alpha_beta beta_delta
  if (x.b == y.a && z.b == x.b && x.a < z.a)
    out.push_back({KbRule::KB1, true, {T(z.a, x.b), T(x.a, z.a), T(z.a, y.b)}, x.a, z.a, x.b, y.b});
  if (x.a == y.b && z.a == x.a && x.b < z.b)
    out.push_back({KbRule::KB1, false, {T(y.a, x.b), T(x.b, z.b), T(x.a, x.b)}, y.a, x.a, x.b, z.b});
  // KB2: beta_gamma gamma_delta alpha_gamma ~ beta_delta alpha_beta beta_gamma
  if (x.b == y.a && z.b == x.b && z.a < x.a)
    out.push_back({KbRule::KB2, true, {T(x.a, y.b), T(z.a, x.a), T(x.a, x.b)}, z.a, x.a, x.b, y.b});
  if (x.a == y.b && z.a == x.a && z.b < x.b)
    out.push_back({KbRule::KB2, false, {T(x.a, z.b), T(z.b, x.b), T(y.a, z.b)}, y.a, x.a, z.b, x.b});
  // KB3: alpha_beta eps_phi gamma_delta ~ eps_phi alpha_beta gamma_delta
  if (x.b <= z.a && z.b <= y.a) out.push_back({KbRule::KB3, true, {y, x, z}});
  if (y.b <= z.a && z.b <= x.a) out.push_back({KbRule::KB3, false, {y, x, z}});
  // KB4: gamma_delta eps_phi alpha_beta ~ gamma_delta alpha_beta eps_phi
  if (z.b <= x.a && x.b <= y.a) out.push_back({KbRule::KB4, true, {x, z, y}});
  if (y.b <= x.a && x.b <= z.a) out.push_back({KbRule::KB4, false, {x, z, y}});
  return out;
}

struct KbRewrite {
  ChainWord chain;
  KbRule rule;
  bool forward = true;
  int pos = 0;
  int alpha = 0, beta = 0, gamma = 0, delta = 0;
};

/// Rewrites of the window starting at step `pos` (0-based). Results that fail to be saturated
/// chains are returned in `rejected` when it is given, and dropped otherwise.
inline std::vector<KbRewrite> kb_rewrites(const ChainWord& chain, int pos, std::vector<KbRewrite>* rejected = nullptr) {
  if (pos < 0 || pos + 3 > chain.length())
    throw Error(ErrorCode::InvalidWindow, "window at " + std::to_string(pos) + " exceeds chain of length " + std::to_string(chain.length()));
  const auto& s = chain.steps();
  const int col = s[pos].column;
  if (s[pos + 1].column != col || s[pos + 2].column != col)
    throw Error(ErrorCode::InvalidWindow, "window at " + std::to_string(pos) + " mixes columns");
  std::vector<KbRewrite> out;
  for (const auto& m : kb_matches(s[pos].t, s[pos + 1].t, s[pos + 2].t)) {
    auto steps = s;
    for (int i = 0; i < 3; ++i) steps[pos + i] = {m.result[i], col};
    try {
      ChainWord c(chain.base(), std::move(steps));
      if (c.top() != chain.top()) throw Error(ErrorCode::InvalidChain, "endpoint moved");
      out.push_back({std::move(c), m.rule, m.forward, pos, m.alpha, m.beta, m.gamma, m.delta});
    } catch (const Error&) {
      if (rejected) rejected->push_back({chain, m.rule, m.forward, pos, m.alpha, m.beta, m.gamma, m.delta});
    }
  }
  return out;
}

/// Every rewrite at every window.
inline std::vector<KbRewrite> kb_rewrites(const ChainWord& chain) {
  std::vector<KbRewrite> out;
  for (int pos = 0; pos + 3 <= chain.length(); ++pos) {
    auto r = kb_rewrites(chain, pos);
    out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  return out;
}

/// KB1 only where beta precedes alpha within positions 1..k of the window's base permutation;
/// KB2 only where delta precedes gamma within positions k+1..n.
inline bool kb_rewrite_respects_position_rule(const ChainWord& chain, const KbRewrite& r) {
  const Permutation& w = chain.permutations()[r.pos];
  const int k = chain.steps()[r.pos].column;
  if (r.rule == KbRule::KB1) {
    const int pb = w.position_of(r.beta), pa = w.position_of(r.alpha);
    return pb < pa && pa <= k;
  }
  if (r.rule == KbRule::KB2) {
    const int pd = w.position_of(r.delta), pg = w.position_of(r.gamma);
    return k < pd && pd < pg;
  }
  return true;
}

/// Filling of a straight shape by transpositions; rows listed top to bottom.
class TranspositionTableau {
 public:
  TranspositionTableau() = default;
  explicit TranspositionTableau(std::vector<std::vector<Transposition>> rows) : rows_(std::move(rows)) {
    std::vector<int> parts;
    for (const auto& r : rows_) {
      if (r.empty()) throw Error(ErrorCode::ShapeMismatch, "empty row in a tableau of transpositions");
      parts.push_back(static_cast<int>(r.size()));
    }
    shape_ = Partition(parts);
  }

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<Transposition>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }

  /// First entries strictly increase along rows and down columns.
  bool is_strict() const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        if (c > 0 && rows_[r][c].a <= rows_[r][c - 1].a) return false;
        if (r > 0 && rows_[r][c].a <= rows_[r - 1][c].a) return false;
      }
    return true;
  }

  /// Rows read left to right, from the bottom row up.
  std::vector<Transposition> row_word() const {
    std::vector<Transposition> out;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
    return out;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r) s += " / ";
      for (std::size_t c = 0; c < rows_[r].size(); ++c) s += (c ? " " : "") + rows_[r][c].to_string();
    }
    return s + "]";
  }

  friend bool operator==(const TranspositionTableau& a, const TranspositionTableau& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const TranspositionTableau& a, const TranspositionTableau& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<std::vector<Transposition>> rows_;
  Partition shape_;
};

/// The strict tableau whose row word is `word`, if any. Its rows must be the maximal runs of
/// strictly increasing first entries, so the decomposition is forced.
inline std::optional<TranspositionTableau> strict_tableau_from_row_word(const std::vector<Transposition>& word) {
  if (word.empty()) return TranspositionTableau();
  std::vector<std::vector<Transposition>> bottom_up{{word.front()}};
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i].a > word[i - 1].a) bottom_up.back().push_back(word[i]);
    else bottom_up.push_back({word[i]});
  }
  for (std::size_t r = 1; r < bottom_up.size(); ++r)
    if (bottom_up[r].size() < bottom_up[r - 1].size()) return std::nullopt;
  std::vector<std::vector<Transposition>> rows(bottom_up.rbegin(), bottom_up.rend());
  TranspositionTableau t(std::move(rows));
  if (!t.is_strict()) return std::nullopt;
  return t;
}

struct PlacticClass {
  BruhatInterval interval;
  std::set<ChainWord> members;
  std::optional<TranspositionTableau> canonical;
};

/// Breadth-first closure of a chain under KB1-KB4 in both directions.
inline PlacticClass plactic_class(const ChainWord& chain) {
  const int k = chain.length() ? chain.steps().front().column : 0;
  PlacticClass cls{{chain.base(), chain.top(), k}, {chain}, std::nullopt};
  std::deque<ChainWord> queue{chain};
  while (!queue.empty()) {
    ChainWord cur = std::move(queue.front());
    queue.pop_front();
    for (auto& r : kb_rewrites(cur))
      if (cls.members.insert(r.chain).second) queue.push_back(std::move(r.chain));
  }
  int found = 0;
  for (const auto& m : cls.members)
    if (auto t = strict_tableau_from_row_word(m.word())) {
      ++found;
      cls.canonical = std::move(t);
    }
  if (found > 1) cls.canonical.reset();
  return cls;
}

/// Canonical tableaux keyed by chain, filled one whole class at a time.
class PlacticCache {
 public:
  /// P(chain): the unique strict-tableau row word in the chain's class.
  const TranspositionTableau& canonical_P(const ChainWord& chain) {
    if (auto it = p_.find(chain); it != p_.end()) return it->second;
    const PlacticClass cls = plactic_class(chain);
    int found = 0;
    for (const auto& m : cls.members)
      if (strict_tableau_from_row_word(m.word())) ++found;
    if (found == 0) throw Error(ErrorCode::NoCanonical, "no strict-tableau row word in the class of " + chain.to_string());
    if (found > 1)
      throw Error(ErrorCode::MultipleCanonical, std::to_string(found) + " strict-tableau row words in the class of " + chain.to_string());
    for (const auto& m : cls.members) p_.emplace(m, *cls.canonical);
    return p_.at(chain);
  }

  /// Q(chain): entry m sits in the box by which shape(P(prefix m)) exceeds shape(P(prefix m-1)).
  Tableau recording_Q(const ChainWord& chain) {
    std::vector<Partition> shapes{Partition()};
    for (int m = 1; m <= chain.length(); ++m) {
      const Partition next = canonical_P(chain.prefix(m)).shape();
      const Partition& prev = shapes.back();
      if (next.size() != prev.size() + 1 || !next.contains(prev))
        throw Error(ErrorCode::PrefixShapeAnomaly,
                    "prefix " + std::to_string(m) + " of " + chain.to_string() + " has shape " + next.to_string() + " after " + prev.to_string());
      shapes.push_back(next);
    }
    return tableau_from_chain(YoungChain(std::move(shapes)));
  }

  std::pair<TranspositionTableau, Tableau> p_and_q(const ChainWord& chain) {
    TranspositionTableau p = canonical_P(chain);
    return {std::move(p), recording_Q(chain)};
  }

 private:
  std::map<ChainWord, TranspositionTableau> p_;
};

inline TranspositionTableau canonical_P(const ChainWord& chain) {
  PlacticCache cache;
  return cache.canonical_P(chain);
}

inline Tableau recording_Q(const ChainWord& chain) {
  PlacticCache cache;
  return cache.recording_Q(chain);
}

/// Number of strict tableaux of transpositions of shape lambda whose row word is a maximal chain of [v,w]_k.
inline long long beligan_count(const BruhatInterval& I, const Partition& lambda) {
  if (has_nesting(I)) throw Error(ErrorCode::NestingPresent, "[" + I.v.to_string() + "," + I.w.to_string() + "]_" + std::to_string(I.k) + " contains nesting");
  if (length(I.w) - length(I.v) != lambda.size()) return 0;
  long long count = 0;
  for (const auto& c : enumerate_maximal_chains(I)) {
    auto t = strict_tableau_from_row_word(c.word());
    if (t && t->shape() == lambda) ++count;
  }
  return count;
}

/// Maximal chains of I grouped into plactic classes, in order of first appearance.
inline std::vector<PlacticClass> plactic_classes(const BruhatInterval& I) {
  std::vector<PlacticClass> out;
  std::set<ChainWord> seen;
  for (const auto& c : enumerate_maximal_chains(I)) {
    if (seen.count(c)) continue;
    PlacticClass cls = plactic_class(c);
    seen.insert(cls.members.begin(), cls.members.end());
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace bruhat_taquin
