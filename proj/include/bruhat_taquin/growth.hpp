#pragma once

#include <algorithm>
#include <array>
#include <atomic>
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
#include "bruhat_taquin/plactic.hpp"
#include "bruhat_taquin/schubert.hpp"
#include "bruhat_taquin/young.hpp"

namespace bruhat_taquin {

enum class Rule { J0, J1, J2, J3, J4, J5, J5p, J6, J6p, J7, J7p, J8, J8p };

inline constexpr std::array<Rule, 13> kAllRules{Rule::J0, Rule::J1,  Rule::J2, Rule::J3,  Rule::J4, Rule::J5,  Rule::J5p,
                                                Rule::J6, Rule::J6p, Rule::J7, Rule::J7p, Rule::J8, Rule::J8p};

inline std::string to_string(Rule r) {
  static const char* names[] = {"J0", "J1", "J2", "J3", "J4", "J5", "J5'", "J6", "J6'", "J7", "J7'", "J8", "J8'"};
  return names[static_cast<int>(r)];
}

inline Rule parse_rule(std::string_view s) {
  for (Rule r : kAllRules)
    if (to_string(r) == s) return r;
  throw Error(ErrorCode::ParseError, "unknown rule tag '" + std::string(s) + "'");
}

/// The rule a cell fires after conjugating the whole diagram by w0.
inline Rule w0_partner(Rule r) {
  switch (r) {
    case Rule::J0: return Rule::J0;
    case Rule::J1: return Rule::J3;
    case Rule::J3: return Rule::J1;
    case Rule::J2: return Rule::J4;
    case Rule::J4: return Rule::J2;
    case Rule::J5: return Rule::J7;
    case Rule::J7: return Rule::J5;
    case Rule::J5p: return Rule::J7p;
    case Rule::J7p: return Rule::J5p;
    case Rule::J6: return Rule::J8;
    case Rule::J8: return Rule::J6;
    case Rule::J6p: return Rule::J8p;
    case Rule::J8p: return Rule::J6p;
  }
  return r;
}

struct LocalRuleResult {
  Transposition sigma;      // bottom edge of the cell
  Transposition tau_prime;  // right edge of the cell
  Rule rule;
};

/// The 13-case table. Inputs are the cell's left edge tau and top edge sigma_top, with w the
/// bottom-left corner; horizontal edges are k-covers, vertical ones l-covers.
inline LocalRuleResult local_rule(const Permutation& w, Transposition tau, Transposition sigma_top, int k, int l) {
  auto pos = [&](int value) { return w.position_of(value); };
  std::vector<LocalRuleResult> hits;
  const Transposition t = tau, s = sigma_top;
  if (t.disjoint(s)) hits.push_back({s, t, Rule::J0});
  if (t.a == s.a && t.b < s.b) hits.push_back({Transposition(t.b, s.b), t, Rule::J1});  // a_b a_c
  if (t.a == s.a && s.b < t.b) hits.push_back({s, Transposition(s.b, t.b), Rule::J2});  // a_c a_b
  if (t.b == s.b && s.a < t.a) hits.push_back({Transposition(s.a, t.a), t, Rule::J3});  // b_c a_c
  if (t.b == s.b && t.a < s.a) hits.push_back({s, Transposition(t.a, s.a), Rule::J4});  // a_c b_c
  if (t.b == s.a) {  // alpha_beta beta_gamma
    const int a = t.a, b = t.b, c = s.b;
    if (pos(b) <= k && k < pos(c)) hits.push_back({Transposition(b, c), Transposition(a, c), Rule::J5});
    if (k < pos(b) && pos(b) < pos(c)) hits.push_back({t, s, Rule::J5p});
    if (pos(c) <= l && l < pos(b)) hits.push_back({Transposition(a, c), Transposition(a, b), Rule::J6});
    if (l < pos(c) && pos(c) < pos(b)) hits.push_back({t, s, Rule::J6p});
  }
  if (t.a == s.b) {  // beta_gamma alpha_beta
    const int a = s.a, b = t.a, c = t.b;
    if (pos(a) <= k && k < pos(b)) hits.push_back({Transposition(a, b), Transposition(a, c), Rule::J7});
    if (pos(a) < pos(b) && pos(b) <= k) hits.push_back({t, s, Rule::J7p});
    if (pos(b) <= l && l < pos(a)) hits.push_back({Transposition(a, c), Transposition(b, c), Rule::J8});
    if (pos(b) < pos(a) && pos(a) <= l) hits.push_back({t, s, Rule::J8p});
  }
  const std::string where = "w=" + w.to_string() + ", input " + tau.to_string() + " " + sigma_top.to_string() + ", k=" +
                            std::to_string(k) + ", l=" + std::to_string(l);
  if (hits.empty()) throw Error(ErrorCode::NoCaseMatches, "no local rule applies at " + where);
  if (hits.size() > 1) {
    std::string tags;
    for (const auto& h : hits) tags += " " + to_string(h.rule);
    throw Error(ErrorCode::MultipleCasesMatch, "rules" + tags + " all apply at " + where);
  }
  return hits.front();
}

/// The search-based rule: of the two middle elements of [w, sigma_top tau w], take the one other
/// than tau w when it gives a k-cover then an l-cover, otherwise tau w itself.
inline std::pair<Transposition, Transposition> abstract_local_rule(const Permutation& w, Transposition tau, Transposition sigma_top, int k, int l) {
  const Permutation mid = apply_value_transposition(w, tau);
  const Permutation top = apply_value_transposition(mid, sigma_top);
  std::vector<Permutation> atoms;
  for (const auto& e : bruhat_up_covers(w))
    if (is_cover(e.to, top)) atoms.push_back(e.to);
  const std::string where = "[" + w.to_string() + "," + top.to_string() + "]";
  if (atoms.size() != 2 || std::find(atoms.begin(), atoms.end(), mid) == atoms.end())
    throw Error(ErrorCode::NoValidChoice, where + " is not a diamond through " + mid.to_string());
  const Permutation& x = atoms[0] == mid ? atoms[1] : atoms[0];
  auto works = [&](const Permutation& y) { return is_cover(w, y, k) && is_cover(y, top, l); };
  const Permutation* chosen = works(x) ? &x : works(mid) ? &mid : nullptr;
  if (!chosen) throw Error(ErrorCode::NoValidChoice, "neither middle element of " + where + " works for k=" + std::to_string(k) + ", l=" + std::to_string(l));
  return {transposition_between(w, *chosen), transposition_between(*chosen, top)};
}

/// Number of cells filled so far in this process, each one checked against the search-based rule.
inline std::atomic<long long>& cells_cross_checked() {
  static std::atomic<long long> count{0};
  return count;
}

/// Matrix w^{i,j}, i = 0..p along the horizontal chains, j = 0..q along the vertical ones.
struct GrowthDiagram {
  std::vector<std::vector<Permutation>> grid;
  std::vector<int> h_cols;                // column of the horizontal edges i -> i+1
  std::vector<int> v_cols;                // column of the vertical edges j -> j+1
  std::vector<std::vector<Rule>> fired;   // fired[i][j] for the cell with bottom-left corner (i, j)

  int p() const { return static_cast<int>(h_cols.size()); }
  int q() const { return static_cast<int>(v_cols.size()); }

  std::optional<int> k() const {
    if (h_cols.empty() || std::any_of(h_cols.begin(), h_cols.end(), [&](int c) { return c != h_cols.front(); })) return std::nullopt;
    return h_cols.front();
  }

  ChainWord row(int j) const {
    std::vector<Permutation> perms;
    for (int i = 0; i <= p(); ++i) perms.push_back(grid[i][j]);
    return ChainWord::through(perms, h_cols);
  }
  ChainWord column(int i) const { return ChainWord::through(grid[i], v_cols); }

  ChainWord bottom_row() const { return row(0); }
  ChainWord top_row() const { return row(q()); }
  ChainWord left_column() const { return column(0); }
  ChainWord right_column() const { return column(p()); }

  std::vector<Rule> fired_in_order() const {
    std::vector<Rule> out;
    for (int j = q() - 1; j >= 0; --j)
      for (int i = 0; i < p(); ++i) out.push_back(fired[i][j]);
    return out;
  }

  /// Every horizontal edge is an h_cols cover and every vertical edge a v_cols cover.
  bool is_valid() const {
    for (int j = 0; j <= q(); ++j)
      for (int i = 0; i < p(); ++i)
        if (!is_cover(grid[i][j], grid[i + 1][j], h_cols[i])) return false;
    for (int i = 0; i <= p(); ++i)
      for (int j = 0; j < q(); ++j)
        if (!is_cover(grid[i][j], grid[i][j + 1], v_cols[j])) return false;
    return true;
  }

  friend bool operator==(const GrowthDiagram&, const GrowthDiagram&) = default;
};

/// Fill from the left column and the top row (which must share the top-left corner). Every cell
/// is computed by the rule table and by the search-based rule; a disagreement throws.
inline GrowthDiagram fill_growth(const ChainWord& left, const ChainWord& top) {
  if (left.top() != top.base())
    throw Error(ErrorCode::BoundaryMismatch, "left column ends at " + left.top().to_string() + " but the top row starts at " + top.base().to_string());
  GrowthDiagram d;
  d.h_cols = top.columns();
  d.v_cols = left.columns();
  const int p = d.p(), q = d.q();
  d.grid.assign(p + 1, std::vector<Permutation>(q + 1));
  d.fired.assign(p, std::vector<Rule>(q, Rule::J0));
  for (int j = 0; j <= q; ++j) d.grid[0][j] = left.permutations()[j];
  for (int i = 0; i <= p; ++i) d.grid[i][q] = top.permutations()[i];
  for (int j = q - 1; j >= 0; --j) {
    for (int i = 0; i < p; ++i) {
      const Permutation& w = d.grid[i][j];
      const Transposition tau = transposition_between(w, d.grid[i][j + 1]);
      const Transposition sigma_top = transposition_between(d.grid[i][j + 1], d.grid[i + 1][j + 1]);
      const int k = d.h_cols[i], l = d.v_cols[j];
      const LocalRuleResult r = local_rule(w, tau, sigma_top, k, l);
      const auto [s2, t2] = abstract_local_rule(w, tau, sigma_top, k, l);
      if (s2 != r.sigma || t2 != r.tau_prime)
        throw Error(ErrorCode::RuleDisagreement, "cell (" + std::to_string(i) + "," + std::to_string(j) + "): " + to_string(r.rule) + " gives " +
                                                     r.sigma.to_string() + " " + r.tau_prime.to_string() + ", search gives " + s2.to_string() +
                                                     " " + t2.to_string());
      ++cells_cross_checked();
      d.grid[i + 1][j] = apply_value_transposition(w, r.sigma);
      d.fired[i][j] = r.rule;
    }
  }
  return d;
}

/// Growth diagram of jeu de taquin for Delta (mixed chain ending at v) and Gamma (k-chain from v).
inline GrowthDiagram fill_growth_diagram(const ChainWord& delta, const ChainWord& gamma, int k) {
  if (!gamma.is_pure(k)) throw Error(ErrorCode::PreconditionViolated, "the top row must be a chain in " + std::to_string(k) + "-Bruhat order");
  return fill_growth(delta, gamma);
}

inline ChainWord jdt_chain(const ChainWord& delta, const ChainWord& gamma, int k) { return fill_growth_diagram(delta, gamma, k).bottom_row(); }

/// Feeding (bottom row, right column) through the transposed fill returns (left column, top row).
inline bool jdt_symmetry_check(const ChainWord& delta, const ChainWord& gamma, int k) {
  const GrowthDiagram d = fill_growth_diagram(delta, gamma, k);
  const GrowthDiagram back = fill_growth(d.bottom_row(), d.right_column());
  return back.bottom_row() == delta && back.right_column() == gamma;
}

/// The diagram conjugated by w0 (columns c -> n - c), rebuilt from its conjugated boundary.
inline GrowthDiagram conjugate_diagram_by_w0(const GrowthDiagram& d) {
  const int n = d.grid[0][0].size();
  std::vector<Permutation> left, top;
  std::vector<int> lc, tc;
  for (int j = 0; j <= d.q(); ++j) left.push_back(conjugate_by_w0(d.grid[0][j]));
  for (int i = 0; i <= d.p(); ++i) top.push_back(conjugate_by_w0(d.grid[i][d.q()]));
  for (int c : d.v_cols) lc.push_back(n - c);
  for (int c : d.h_cols) tc.push_back(n - c);
  return fill_growth(ChainWord::through(left, lc), ChainWord::through(top, tc));
}

/// Conjugating a filled diagram entrywise agrees with refilling the conjugated boundary, and every
/// cell fires the partner rule.
inline bool w0_duality_check(const GrowthDiagram& d) {
  const GrowthDiagram c = conjugate_diagram_by_w0(d);
  for (int i = 0; i <= d.p(); ++i)
    for (int j = 0; j <= d.q(); ++j)
      if (c.grid[i][j] != conjugate_by_w0(d.grid[i][j])) return false;
  for (int i = 0; i < d.p(); ++i)
    for (int j = 0; j < d.q(); ++j)
      if (c.fired[i][j] != w0_partner(d.fired[i][j])) return false;
  return true;
}

/// Maximal k-chains from the identity to u(lambda, k) in S_n; empty when lambda does not fit.
inline std::vector<ChainWord> grassmannian_chains(const Partition& lambda, int k, int n) {
  if (lambda.length() > k || lambda.part(1) > n - k) return {};
  return enumerate_maximal_chains({Permutation::identity(n), partition_to_grassmannian(lambda, k, n), k});
}

enum class AuxProperty { PL, PR, PLR };

inline std::string to_string(AuxProperty p) {
  switch (p) {
    case AuxProperty::PL: return "PL";
    case AuxProperty::PR: return "PR";
    case AuxProperty::PLR: return "PLR";
  }
  return "?";
}

/// One (lambda, Gamma') comparison of the jeu de taquin count against the oracle.
struct SpeclrrRecord {
  Partition lambda;
  std::optional<ChainWord> target;  // Gamma'; absent when u(lambda,k) lies outside S_n
  long long count = 0;
  Coefficient oracle = 0;
  bool pass() const { return count == oracle; }
};

/// Jeu de taquin images of every maximal chain of [v,w]_k under Delta.
inline std::map<ChainWord, long long> jdt_histogram(const ChainWord& delta, const BruhatInterval& I) {
  std::map<ChainWord, long long> hist;
  for (const auto& g : enumerate_maximal_chains(I)) ++hist[jdt_chain(delta, g, I.k)];
  return hist;
}

inline Coefficient lr_oracle(const SchubertOracle& oracle, const Partition& lambda, int k, const Permutation& v, const Permutation& w) {
  const int n = std::max(v.size(), k + lambda.part(1));
  const Permutation u = partition_to_grassmannian(lambda, k, std::max(n, k + 1));
  return oracle.structure_constant(u, v, w);
}

/// Counts against the oracle for every lambda of size l(w) - l(v) and every Gamma'.
inline std::vector<SpeclrrRecord> speclrr_records(const SchubertOracle& oracle, const ChainWord& delta, const BruhatInterval& I) {
  const int n = I.v.size();
  const int size = length(I.w) - length(I.v);
  std::vector<SpeclrrRecord> out;
  if (size < 0) return out;
  const auto hist = jdt_histogram(delta, I);
  for (const Partition& lambda : partitions_of(size, -1, I.k)) {
    const Coefficient c = lr_oracle(oracle, lambda, I.k, I.v, I.w);
    const auto targets = grassmannian_chains(lambda, I.k, n);
    if (targets.empty()) out.push_back({lambda, std::nullopt, 0, c});
    for (const auto& t : targets) {
      auto it = hist.find(t);
      out.push_back({lambda, t, it == hist.end() ? 0 : it->second, c});
    }
  }
  return out;
}

struct SpeclrrResult {
  long long count = 0;
  Coefficient oracle = 0;
  bool pass = false;
};

inline void require_aux_property(const ChainWord& delta, int k) {
  const Permutation& v = delta.top();
  const bool pl = is_k_semi_shuffle(v, k) && has_property_PL(delta, k);
  const bool pr = has_no_descents_before(v, k) && has_property_PR(delta, k);
  if (!pl && !pr) throw Error(ErrorCode::PropertyViolation, "Delta = " + delta.to_string_with_columns() + " has neither (PL) nor (PR) for k=" + std::to_string(k));
}

/// Number of maximal chains of [v,w]_k sent to target by jdt_Delta, against c^w_{u(lambda,k),v}.
inline SpeclrrResult verify_speclrr(const SchubertOracle& oracle, const BruhatInterval& I, const Partition& lambda, const ChainWord& target,
                                    const ChainWord& delta) {
  require_aux_property(delta, I.k);
  if (delta.top() != I.v) throw Error(ErrorCode::BoundaryMismatch, "Delta must end at v");
  long long count = 0;
  for (const auto& g : enumerate_maximal_chains(I))
    if (jdt_chain(delta, g, I.k) == target) ++count;
  const Coefficient c = lr_oracle(oracle, lambda, I.k, I.v, I.w);
  return {count, c, count == c};
}

/// Every admissible auxiliary chain for v: all (PL) chains if v is a k-semi-shuffle, all (PR)
/// chains if v has no descents before k.
inline std::vector<std::pair<AuxProperty, ChainWord>> admissible_deltas(const Permutation& v, int k) {
  std::vector<std::pair<AuxProperty, ChainWord>> out;
  for (auto& c : enumerate_PL_chains(v, k)) out.emplace_back(AuxProperty::PL, std::move(c));
  for (auto& c : enumerate_PR_chains(v, k)) out.emplace_back(AuxProperty::PR, std::move(c));
  return out;
}

/// jdt_Delta(Gamma) is the same for every admissible Delta, for every Gamma in [v,w]_k.
inline bool delta_independence_check(const BruhatInterval& I) {
  const auto deltas = admissible_deltas(I.v, I.k);
  if (deltas.size() < 2) return true;
  for (const auto& g : enumerate_maximal_chains(I)) {
    const ChainWord first = jdt_chain(deltas.front().second, g, I.k);
    for (std::size_t d = 1; d < deltas.size(); ++d)
      if (jdt_chain(deltas[d].second, g, I.k) != first) return false;
  }
  return true;
}

struct ConjectureResult {
  std::optional<ChainWord> witness;
  std::size_t candidates = 0;  // (PLR) chains tried
  bool pass() const { return witness.has_value(); }
};

/// Search the (PLR) chains to v for one whose counts match the oracle for every Gamma' of shape lambda.
inline ConjectureResult verify_conjecture_plr(const SchubertOracle& oracle, const BruhatInterval& I, const Partition& lambda) {
  ConjectureResult res;
  const int n = I.v.size();
  const Coefficient c = lr_oracle(oracle, lambda, I.k, I.v, I.w);
  const auto targets = grassmannian_chains(lambda, I.k, n);
  const auto chains = enumerate_maximal_chains(I);
  for (const auto& delta : enumerate_PLR_chains(I.v, I.k)) {
    ++res.candidates;
    std::map<ChainWord, long long> hist;
    for (const auto& g : chains) ++hist[jdt_chain(delta, g, I.k)];
    bool ok = true;
    if (targets.empty()) ok = c == 0;
    for (const auto& t : targets) {
      auto it = hist.find(t);
      if ((it == hist.end() ? 0 : it->second) != c) {
        ok = false;
        break;
      }
    }
    if (ok) {
      res.witness = delta;
      break;
    }
  }
  return res;
}

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

struct CheckOutcome {
  CheckStatus status = CheckStatus::Pass;
  std::string reason;
};

/// jdt_Delta sends the row word of P(Gamma) to the row word of P(Gamma'), and Q(Gamma) = Q(Gamma').
inline CheckOutcome corpres_check(const ChainWord& delta, const ChainWord& gamma, int k, PlacticCache& cache) {
  const ChainWord image = jdt_chain(delta, gamma, k);
  if (has_nesting({gamma.base(), gamma.top(), k})) return {CheckStatus::Skipped, "interval of Gamma contains nesting"};
  if (has_nesting({image.base(), image.top(), k})) return {CheckStatus::Skipped, "interval of jdt(Gamma) contains nesting"};
  const TranspositionTableau p = cache.canonical_P(gamma);
  const TranspositionTableau p_image = cache.canonical_P(image);
  const ChainWord p_chain = ChainWord::pure(gamma.base(), p.row_word(), k);
  const ChainWord moved = jdt_chain(delta, p_chain, k);
  if (moved.word() != p_image.row_word())
    return {CheckStatus::Fail, "jdt of " + p_chain.to_string() + " is " + moved.to_string() + ", expected " + p_image.to_string()};
  if (cache.recording_Q(gamma) != cache.recording_Q(image)) return {CheckStatus::Fail, "Q changes under jdt for " + gamma.to_string()};
  return {};
}

/// Q(jdt_Delta(Gamma)) = Q(Gamma) for every maximal chain Gamma of [v,w]_k.
inline CheckOutcome presq_check(const BruhatInterval& I, const ChainWord& delta, PlacticCache& cache) {
  if (has_nesting(I)) return {CheckStatus::Skipped, "interval contains nesting"};
  for (const auto& g : enumerate_maximal_chains(I)) {
    const ChainWord image = jdt_chain(delta, g, I.k);
    if (has_nesting({image.base(), image.top(), I.k})) return {CheckStatus::Skipped, "image interval contains nesting"};
    if (cache.recording_Q(g) != cache.recording_Q(image)) return {CheckStatus::Fail, "Q changes under jdt for " + g.to_string()};
  }
  return {};
}

/// Violations found by the lemma checks on one diagram (empty when all hold).
struct LemmaReport {
  std::vector<std::string> violations;
  long long cells = 0;
  long long kb_fragments = 0;
  long long pair_fragments = 0;
  bool ok() const { return violations.empty(); }
  void merge(const LemmaReport& o) {
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    cells += o.cells;
    kb_fragments += o.kb_fragments;
    pair_fragments += o.pair_fragments;
  }
};

inline const std::set<Rule>& rules_excluded_under_PL() {
  static const std::set<Rule> s{Rule::J3, Rule::J4, Rule::J6, Rule::J6p, Rule::J7, Rule::J8p};
  return s;
}

inline std::set<Rule> rules_excluded_under_PR() {
  std::set<Rule> s;
  for (Rule r : rules_excluded_under_PL()) s.insert(w0_partner(r));
  return s;
}

/// Checks on a diagram whose Delta has (PL) or (PR):
/// excluded rules never fire; plactic left-hand sides in a row stay left-hand sides one row down,
/// and rewriting both commutes with the fill; first entries of consecutive steps keep their order;
/// the w0-conjugated diagram fires the partner rules.
inline LemmaReport lemma_checks(const GrowthDiagram& d, AuxProperty prop) {
  LemmaReport rep;
  rep.cells = static_cast<long long>(d.p()) * d.q();
  const auto excluded = prop == AuxProperty::PL ? rules_excluded_under_PL() : rules_excluded_under_PR();
  const std::string where = "diagram " + d.left_column().to_string_with_columns() + " | " + d.top_row().to_string();
  for (int i = 0; i < d.p(); ++i)
    for (int j = 0; j < d.q(); ++j)
      if (excluded.count(d.fired[i][j])) rep.violations.push_back(to_string(d.fired[i][j]) + " fired under (" + to_string(prop) + ") in " + where);
  for (int j = 0; j < d.q(); ++j) {
    const ChainWord upper = d.row(j + 1);
    const ChainWord lower = d.row(j);
    const int l = d.v_cols[j];
    for (int i = 0; i + 2 <= d.p(); ++i) {
      ++rep.pair_fragments;
      const Transposition x = upper.steps()[i].t, y = upper.steps()[i + 1].t;
      const Transposition x2 = lower.steps()[i].t, y2 = lower.steps()[i + 1].t;
      if ((x.a < y.a) != (x2.a < y2.a))
        rep.violations.push_back("order of first entries changes from " + x.to_string() + " " + y.to_string() + " to " + x2.to_string() + " " +
                                 y2.to_string() + " in " + where);
    }
    for (int i = 0; i + 3 <= d.p(); ++i) {
      if (!d.k() || d.h_cols[i] != d.h_cols[i + 2]) continue;
      const ChainWord window = upper.suffix_from(i).prefix(3);
      const ChainWord below = lower.suffix_from(i).prefix(3);
      const ChainWord edge = ChainWord::through({d.grid[i][j], d.grid[i][j + 1]}, {l});
      const ChainWord right = ChainWord::through({d.grid[i + 3][j], d.grid[i + 3][j + 1]}, {l});
      for (const auto& r : kb_rewrites(window, 0)) {
        if (!r.forward) continue;
        ++rep.kb_fragments;
        const auto below_rewrites = kb_rewrites(below, 0);
        const bool lhs = std::any_of(below_rewrites.begin(), below_rewrites.end(), [](const KbRewrite& b) { return b.forward; });
        if (!lhs) {
          rep.violations.push_back("left-hand side " + window.to_string() + " maps to " + below.to_string() + ", not a left-hand side, in " + where);
          continue;
        }
        const GrowthDiagram f = fill_growth(edge, r.chain);
        const ChainWord image = f.bottom_row();
        const bool related = std::any_of(below_rewrites.begin(), below_rewrites.end(), [&](const KbRewrite& b) { return b.forward && b.chain == image; });
        if (!related || f.right_column() != right)
          rep.violations.push_back("rewriting " + window.to_string() + " by " + to_string(r.rule) + " does not commute with the fill in " + where);
      }
    }
  }
  if (!w0_duality_check(d)) rep.violations.push_back("w0 duality fails for " + where);
  return rep;
}

/// Grassmannian diagram (k = l) against Fomin's fill of the corresponding tableaux.
struct GrassmannianComparison {
  bool only_classical_rules = true;
  bool matches_fomin = true;
  bool matches_rectification = true;
};

inline std::vector<Permutation> to_grassmannian_chain(const YoungChain& c, int k, int n) {
  std::vector<Permutation> out;
  for (const auto& m : c.members) out.push_back(partition_to_grassmannian(m, k, n));
  return out;
}

inline GrassmannianComparison compare_with_fomin(const YoungChain& s, const YoungChain& t, int k, int n) {
  const ChainWord delta = ChainWord::through(to_grassmannian_chain(s, k, n), std::vector<int>(s.length(), k));
  const ChainWord gamma = ChainWord::through(to_grassmannian_chain(t, k, n), std::vector<int>(t.length(), k));
  const GrowthDiagram d = fill_growth_diagram(delta, gamma, k);
  const auto fomin = fomin_fill(s, t);
  GrassmannianComparison out;
  for (int i = 0; i < d.p(); ++i)
    for (int j = 0; j < d.q(); ++j) {
      const Rule r = d.fired[i][j];
      if (r != Rule::J0 && r != Rule::J5p && r != Rule::J7p) out.only_classical_rules = false;
    }
  std::vector<Partition> bottom;
  for (int i = 0; i <= d.p(); ++i) {
    for (int j = 0; j <= d.q(); ++j)
      if (!is_grassmannian(d.grid[i][j], k) || grassmannian_to_partition(d.grid[i][j], k) != fomin[i][j]) out.matches_fomin = false;
    if (is_grassmannian(d.grid[i][0], k)) bottom.push_back(grassmannian_to_partition(d.grid[i][0], k));
  }
  if (!out.matches_fomin) out.matches_rectification = false;
  else out.matches_rectification = tableau_from_chain(YoungChain(bottom)) == rectify(tableau_from_chain(t));
  return out;
}

}  // namespace bruhat_taquin
