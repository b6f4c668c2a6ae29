#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bruhat_taquin/chains.hpp"
#include "bruhat_taquin/growth.hpp"
#include "bruhat_taquin/partition.hpp"
#include "bruhat_taquin/permutation.hpp"
#include "bruhat_taquin/plactic.hpp"
#include "bruhat_taquin/polynomial.hpp"
#include "bruhat_taquin/schubert.hpp"
#include "bruhat_taquin/young.hpp"

namespace bruhat_taquin {

using json = nlohmann::json;

namespace detail {
template <class F>
auto parse_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}
}  // namespace detail

inline void to_json(json& j, const Permutation& p) { j = p.to_string(); }
inline void from_json(const json& j, Permutation& p) { p = Permutation::parse(j.get<std::string>()); }

inline void to_json(json& j, const Transposition& t) { j = t.to_string(); }
inline void from_json(const json& j, Transposition& t) { t = Transposition::parse(j.get<std::string>()); }

inline void to_json(json& j, const Partition& p) { j = p.parts(); }
inline void from_json(const json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

/// {"base": "...", "steps": [{"t": "a_b", "k": column}, ...]}
inline void to_json(json& j, const ChainWord& c) {
  json steps = json::array();
  for (const auto& s : c.steps()) steps.push_back({{"t", s.t}, {"k", s.column}});
  j = {{"base", c.base()}, {"steps", steps}};
}
inline void from_json(const json& j, ChainWord& c) {
  std::vector<ChainStep> steps;
  for (const auto& s : j.at("steps")) steps.push_back({s.at("t").get<Transposition>(), s.at("k").get<int>()});
  c = ChainWord(j.at("base").get<Permutation>(), std::move(steps));
}

/// {"shape": [outer], "inner": [inner], "rows": [[0, 0, 3], [1, 2]]}
inline void to_json(json& j, const Tableau& t) { j = {{"shape", t.shape().outer}, {"inner", t.shape().inner}, {"rows", t.rows()}}; }
inline void from_json(const json& j, Tableau& t) {
  const Partition inner = j.contains("inner") ? j.at("inner").get<Partition>() : Partition();
  t = Tableau(SkewShape(j.at("shape").get<Partition>(), inner), j.at("rows").get<std::vector<std::vector<int>>>());
}

/// Rows of "a_b" strings, top row first.
inline void to_json(json& j, const TranspositionTableau& t) { j = t.rows(); }
inline void from_json(const json& j, TranspositionTableau& t) { t = TranspositionTableau(j.get<std::vector<std::vector<Transposition>>>()); }

/// {"nvars": m, "terms": [{"exponent": [...], "coeff": c}, ...]} in increasing monomial order.
inline void to_json(json& j, const Polynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"coeff", c}});
  j = {{"nvars", p.nvars()}, {"terms", terms}};
}
inline void from_json(const json& j, Polynomial& p) {
  p = Polynomial(j.at("nvars").get<int>());
  for (const auto& t : j.at("terms")) p.add_term(t.at("exponent").get<Polynomial::Exponent>(), t.at("coeff").get<Coefficient>());
}

/// [{"perm": "312", "coeff": 1}, ...]
inline void to_json(json& j, const SchubertExpansion& e) {
  j = json::array();
  for (const auto& [w, c] : e.terms()) j.push_back({{"perm", w}, {"coeff", c}});
}
inline void from_json(const json& j, SchubertExpansion& e) {
  e = SchubertExpansion();
  for (const auto& t : j) e.add(t.at("perm").get<Permutation>(), t.at("coeff").get<Coefficient>());
}

/// Compact {"312": 1} form used on the command line.
inline json expansion_as_object(const SchubertExpansion& e) {
  json j = json::object();
  for (const auto& [w, c] : e.terms()) j[w.to_string()] = c;
  return j;
}

inline void to_json(json& j, Rule r) { j = to_string(r); }
inline void from_json(const json& j, Rule& r) { r = parse_rule(j.get<std::string>()); }

/// {"grid": [[w^{i,0}, ..., w^{i,q}], ...], "k": k or null, "h_cols": [...], "l_seq": [...], "fired": [[...]]}
inline void to_json(json& j, const GrowthDiagram& d) {
  const auto k = d.k();
  j = {{"grid", d.grid}, {"k", k ? json(*k) : json(nullptr)}, {"h_cols", d.h_cols}, {"l_seq", d.v_cols}, {"fired", d.fired}};
}
inline void from_json(const json& j, GrowthDiagram& d) {
  d.grid = j.at("grid").get<std::vector<std::vector<Permutation>>>();
  d.v_cols = j.at("l_seq").get<std::vector<int>>();
  if (j.contains("h_cols")) {
    d.h_cols = j.at("h_cols").get<std::vector<int>>();
  } else {
    d.h_cols.assign(d.grid.empty() ? 0 : d.grid.size() - 1, j.at("k").get<int>());
  }
  d.fired = j.at("fired").get<std::vector<std::vector<Rule>>>();
  const std::size_t p = d.h_cols.size(), q = d.v_cols.size();
  bool ok = d.grid.size() == p + 1 && d.fired.size() == p;
  for (const auto& col : d.grid) ok = ok && col.size() == q + 1;
  for (const auto& col : d.fired) ok = ok && col.size() == q;
  if (!ok) throw Error(ErrorCode::ParseError, "growth diagram dimensions are inconsistent");
  if (!d.is_valid()) throw Error(ErrorCode::ParseError, "growth diagram edges are not covers with the stated columns");
}

template <class T>
T parse_json_as(const std::string& text) {
  return detail::parse_guard([&] { return json::parse(text).get<T>(); });
}

}  // namespace bruhat_taquin
