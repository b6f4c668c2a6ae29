#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "bruhat_taquin/chains.hpp"
#include "bruhat_taquin/growth.hpp"
#include "bruhat_taquin/plactic.hpp"
#include "bruhat_taquin/schubert.hpp"
#include "bruhat_taquin/serialize.hpp"

namespace bruhat_taquin {

struct SweepOptions {
  std::string suite;
  int n = 4;
  std::vector<int> ks;  // empty: every k in 1..n-1
  int jobs = 1;
  std::size_t sample = 0;  // 0: every instance
  std::uint64_t seed = 0;
  bool timing = false;
};

struct SweepSummary {
  long long pass = 0, fail = 0, skipped = 0, counterexample = 0;
  long long instances = 0;
  long long cells = 0;

  void count(const std::string& status) {
    if (status == "pass") ++pass;
    else if (status == "fail") ++fail;
    else if (status == "skipped") ++skipped;
    else if (status == "counterexample") ++counterexample;
  }
};

inline void to_json(json& j, const SweepSummary& s) {
  j = {{"instances", s.instances}, {"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}, {"counterexample", s.counterexample}, {"cells", s.cells}};
}

struct SweepReport {
  std::vector<json> records;
  SweepSummary summary;
  double elapsed_ms = 0;

  /// Theorem suites fail on any failing record; conjecture counterexamples are data.
  bool ok() const { return summary.fail == 0; }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"speclrr", "beligan", "plactic", "lemmas", "conjecture-plr", "grassmannian"};
  return names;
}

/// First `sample` indices of a seeded Fisher-Yates shuffle of 0..total-1, returned in increasing order.
inline std::vector<std::size_t> sample_indices(std::size_t total, std::size_t sample, std::uint64_t seed) {
  std::vector<std::size_t> idx(total);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (sample == 0 || sample >= total) return idx;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < sample; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (total - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(sample);
  std::sort(idx.begin(), idx.end());
  return idx;
}

namespace detail {

using Task = std::function<std::vector<json>()>;

/// Runs tasks on `jobs` threads; `emit` sees each task's records in task order, as soon as all earlier tasks are done.
inline void run_tasks(const std::vector<Task>& tasks, int jobs, const std::function<void(std::vector<json>&)>& emit) {
  std::vector<std::vector<json>> results(tasks.size());
  std::vector<char> done(tasks.size(), 0);
  std::size_t emitted = 0;
  std::mutex m;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      auto recs = tasks[i]();
      std::lock_guard lock(m);
      results[i] = std::move(recs);
      done[i] = 1;
      for (; emitted < tasks.size() && done[emitted]; ++emitted) {
        emit(results[emitted]);
        results[emitted].clear();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

inline json interval_key(const std::string& suite, const BruhatInterval& I) { return {{"suite", suite}, {"v", I.v}, {"w", I.w}, {"k", I.k}}; }

inline json failure(json rec, const std::exception& e) {
  rec["status"] = "fail";
  if (const auto* err = dynamic_cast<const Error*>(&e)) rec["error"] = std::string(to_string(err->code()));
  rec["reason"] = e.what();
  return rec;
}

inline std::vector<int> ks_for(const SweepOptions& o) {
  if (!o.ks.empty()) return o.ks;
  std::vector<int> ks;
  for (int k = 1; k < o.n; ++k) ks.push_back(k);
  return ks;
}

/// Every nonempty interval [v,w]_k with v in S_n, in order of v, then k, then w.
inline std::vector<BruhatInterval> all_intervals(const SweepOptions& o, const std::function<bool(const Permutation&, int)>& keep_v = {}) {
  std::vector<BruhatInterval> out;
  for (const auto& v : all_permutations(o.n))
    for (int k : ks_for(o)) {
      if (keep_v && !keep_v(v, k)) continue;
      for (const auto& w : upper_set(v, k)) out.push_back({v, w, k});
    }
  return out;
}

inline std::vector<std::pair<AuxProperty, ChainWord>> chosen_deltas(const Permutation& v, int k) {
  std::vector<std::pair<AuxProperty, ChainWord>> out;
  if (is_k_semi_shuffle(v, k)) out.emplace_back(AuxProperty::PL, build_PL_chain(v, k));
  if (has_no_descents_before(v, k)) out.emplace_back(AuxProperty::PR, build_PR_chain(v, k));
  return out;
}

inline bool eligible(const Permutation& v, int k) { return is_k_semi_shuffle(v, k) || has_no_descents_before(v, k); }

inline std::vector<json> speclrr_instance(const SchubertOracle& oracle, const BruhatInterval& I) {
  std::vector<json> out;
  const auto chains = enumerate_maximal_chains(I);
  for (const auto& [prop, delta] : chosen_deltas(I.v, I.k)) {
    json key = interval_key("speclrr", I);
    key["property"] = to_string(prop);
    key["delta"] = delta.to_string_with_columns();
    try {
      std::map<Partition, std::vector<SpeclrrRecord>> by_shape;
      for (auto& r : speclrr_records(oracle, delta, I)) by_shape[r.lambda].push_back(std::move(r));
      for (const auto& [lambda, recs] : by_shape) {
        json rec = key;
        rec["check"] = "lr_count";
        rec["lambda"] = lambda;
        json counts = json::array();
        bool ok = true;
        for (const auto& r : recs) {
          if (r.target) counts.push_back(r.count);
          ok = ok && r.pass();
        }
        rec["targets"] = counts.size();
        rec["counts"] = {{"growth", counts}, {"oracle", recs.front().oracle}};
        rec["status"] = ok ? "pass" : "fail";
        out.push_back(std::move(rec));
      }
    } catch (const std::exception& e) {
      json rec = key;
      rec["check"] = "lr_count";
      out.push_back(failure(rec, e));
    }
    json sym = key;
    sym["check"] = "symmetry";
    try {
      bool ok = true;
      for (const auto& g : chains) ok = ok && jdt_symmetry_check(delta, g, I.k);
      sym["chains"] = chains.size();
      sym["status"] = ok ? "pass" : "fail";
      out.push_back(std::move(sym));
    } catch (const std::exception& e) {
      out.push_back(failure(sym, e));
    }
  }
  json ind = interval_key("speclrr", I);
  ind["check"] = "delta_independence";
  try {
    ind["deltas"] = admissible_deltas(I.v, I.k).size();
    ind["status"] = delta_independence_check(I) ? "pass" : "fail";
    out.push_back(std::move(ind));
  } catch (const std::exception& e) {
    out.push_back(failure(ind, e));
  }
  return out;
}

inline std::vector<json> beligan_instance(const SchubertOracle& oracle, const BruhatInterval& I) {
  std::vector<json> out;
  json key = interval_key("beligan", I);
  key["check"] = "lr_count";
  if (has_nesting(I)) {
    key["status"] = "skipped";
    key["reason"] = "interval contains nesting";
    return {key};
  }
  try {
    for (const auto& lambda : partitions_of(length(I.w) - length(I.v), -1, I.k)) {
      json rec = key;
      rec["lambda"] = lambda;
      const long long b = beligan_count(I, lambda);
      const Coefficient c = lr_oracle(oracle, lambda, I.k, I.v, I.w);
      rec["counts"] = {{"beligan", b}, {"oracle", c}};
      rec["status"] = b == c ? "pass" : "fail";
      out.push_back(std::move(rec));
    }
  } catch (const std::exception& e) {
    out.push_back(failure(key, e));
  }
  return out;
}

/// Plactic structure of one non-nesting interval.
struct PlacticFindings {
  long long chains = 0, classes = 0, sum_f = 0;
  bool unique_canonical = true, bijection = true, class_sizes = true, q_shapes = true;
  long long rejected_rewrites = 0, position_rule_violations = 0;
  bool ok() const {
    return unique_canonical && bijection && class_sizes && q_shapes && sum_f == chains && rejected_rewrites == 0 && position_rule_violations == 0;
  }
};

inline PlacticFindings plactic_findings(const BruhatInterval& I) {
  PlacticFindings f;
  const auto chains = enumerate_maximal_chains(I);
  f.chains = static_cast<long long>(chains.size());
  for (const auto& cls : plactic_classes(I)) {
    ++f.classes;
    if (!cls.canonical) {
      f.unique_canonical = false;
      continue;
    }
    const long long fl = count_standard_tableaux(cls.canonical->shape());
    f.sum_f += fl;
    if (static_cast<long long>(cls.members.size()) != fl) f.class_sizes = false;
  }
  PlacticCache cache;
  std::set<std::pair<TranspositionTableau, Tableau>> pairs;
  for (const auto& c : chains) {
    std::vector<KbRewrite> rejected;
    for (int pos = 0; pos + 3 <= c.length(); ++pos)
      for (const auto& r : kb_rewrites(c, pos, &rejected))
        if (!kb_rewrite_respects_position_rule(c, r)) ++f.position_rule_violations;
    f.rejected_rewrites += static_cast<long long>(rejected.size());
    auto pq = cache.p_and_q(c);
    if (pq.first.shape() != pq.second.shape().outer || !pq.second.is_standard()) f.q_shapes = false;
    pairs.insert(std::move(pq));
  }
  if (pairs.size() != chains.size()) f.bijection = false;
  return f;
}

inline std::vector<json> plactic_instance(const BruhatInterval& I) {
  json rec = interval_key("plactic", I);
  rec["check"] = "plactic";
  if (has_nesting(I)) {
    rec["status"] = "skipped";
    rec["reason"] = "interval contains nesting";
    return {rec};
  }
  try {
    const PlacticFindings f = plactic_findings(I);
    rec["chains"] = f.chains;
    rec["classes"] = f.classes;
    rec["sum_f"] = f.sum_f;
    rec["unique_canonical"] = f.unique_canonical;
    rec["bijection"] = f.bijection;
    rec["class_sizes"] = f.class_sizes;
    rec["rejected_rewrites"] = f.rejected_rewrites;
    rec["position_rule_violations"] = f.position_rule_violations;
    rec["status"] = f.ok() ? "pass" : "fail";
    return {rec};
  } catch (const std::exception& e) {
    return {failure(rec, e)};
  }
}

inline std::vector<json> lemmas_instance(const BruhatInterval& I) {
  std::vector<json> out;
  const json key = interval_key("lemmas", I);
  const bool nesting = has_nesting(I);
  {
    json rec = key;
    rec["check"] = "nonnesting_criteria";
    const auto crit = nonnesting_criteria(I);
    rec["criteria"] = crit;
    rec["nesting"] = nesting;
    rec["status"] = crit.empty() || !nesting ? "pass" : "fail";
    out.push_back(std::move(rec));
  }
  if (!nesting) {
    json rec = key;
    rec["check"] = "simplelem";
    try {
      rec["status"] = check_simplelem(I) ? "pass" : "fail";
      out.push_back(std::move(rec));
    } catch (const std::exception& e) {
      out.push_back(failure(rec, e));
    }
  }
  if (!eligible(I.v, I.k)) return out;
  const auto chains = enumerate_maximal_chains(I);
  PlacticCache cache;
  for (AuxProperty prop : {AuxProperty::PL, AuxProperty::PR}) {
    std::vector<ChainWord> deltas = prop == AuxProperty::PL ? enumerate_PL_chains(I.v, I.k) : enumerate_PR_chains(I.v, I.k);
    if (deltas.empty()) continue;
    json rec = key;
    rec["check"] = "growth_lemmas";
    rec["property"] = to_string(prop);
    try {
      LemmaReport total;
      long long diagrams = 0;
      for (const auto& d : deltas)
        for (const auto& g : chains) {
          total.merge(lemma_checks(fill_growth_diagram(d, g, I.k), prop));
          ++diagrams;
        }
      rec["deltas"] = deltas.size();
      rec["diagrams"] = diagrams;
      rec["cells"] = total.cells;
      rec["violation_count"] = total.violations.size();
      if (!total.ok()) rec["violations"] = std::vector<std::string>(total.violations.begin(), total.violations.begin() + std::min<std::size_t>(5, total.violations.size()));
      rec["status"] = total.ok() ? "pass" : "fail";
      out.push_back(std::move(rec));
    } catch (const std::exception& e) {
      out.push_back(failure(rec, e));
    }
    json pq = key;
    pq["check"] = "q_preservation";
    pq["property"] = to_string(prop);
    try {
      long long pass = 0, skipped = 0, fail = 0;
      std::string reason;
      for (const auto& d : deltas) {
        const CheckOutcome presq = presq_check(I, d, cache);
        if (presq.status == CheckStatus::Fail) {
          ++fail;
          reason = presq.reason;
        }
        for (const auto& g : chains) {
          const CheckOutcome c = corpres_check(d, g, I.k, cache);
          if (c.status == CheckStatus::Pass) ++pass;
          else if (c.status == CheckStatus::Skipped) ++skipped;
          else {
            ++fail;
            reason = c.reason;
          }
        }
      }
      pq["counts"] = {{"pass", pass}, {"skipped", skipped}, {"fail", fail}};
      if (fail) pq["reason"] = reason;
      pq["status"] = fail ? "fail" : pass == 0 && skipped > 0 ? "skipped" : "pass";
      if (pass == 0 && skipped > 0) pq["reason"] = "plactic preconditions fail on every diagram";
      out.push_back(std::move(pq));
    } catch (const std::exception& e) {
      out.push_back(failure(pq, e));
    }
  }
  return out;
}

inline std::vector<json> conjecture_instance(const SchubertOracle& oracle, const BruhatInterval& I, const Partition& lambda) {
  json rec = interval_key("conjecture-plr", I);
  rec["lambda"] = lambda;
  rec["eligible"] = is_k_semi_shuffle(I.v, I.k) ? "PL" : has_no_descents_before(I.v, I.k) ? "PR" : "none";
  try {
    const ConjectureResult r = verify_conjecture_plr(oracle, I, lambda);
    rec["candidates"] = r.candidates;
    rec["oracle"] = lr_oracle(oracle, lambda, I.k, I.v, I.w);
    if (r.witness) {
      rec["witness"] = r.witness->to_string_with_columns();
      std::vector<std::string> forms;
      for (PlrForm f : plr_forms(*r.witness, I.k)) forms.push_back(to_string(f));
      rec["forms"] = forms;
    }
    rec["status"] = r.pass() ? "pass" : "counterexample";
    return {rec};
  } catch (const std::exception& e) {
    return {failure(rec, e)};
  }
}

inline std::vector<json> grassmannian_instance(int n, int k, const Partition& mu, const Partition& nu) {
  json rec = {{"suite", "grassmannian"}, {"k", k}, {"mu", mu}, {"nu", nu}, {"v", partition_to_grassmannian(mu, k, n)},
              {"w", partition_to_grassmannian(nu, k, n)}};
  try {
    long long fills = 0;
    bool rules = true, fomin = true, rect = true;
    const auto inner_tableaux = all_standard_tableaux(SkewShape(mu));
    const auto skew_tableaux = all_standard_tableaux(SkewShape(nu, mu));
    for (const auto& s : inner_tableaux)
      for (const auto& t : skew_tableaux) {
        const auto c = compare_with_fomin(chain_from_tableau(s), chain_from_tableau(t), k, n);
        rules = rules && c.only_classical_rules;
        fomin = fomin && c.matches_fomin;
        rect = rect && c.matches_rectification;
        ++fills;
      }
    rec["fills"] = fills;
    rec["only_J0_J5p_J7p"] = rules;
    rec["matches_fomin"] = fomin;
    rec["matches_rectification"] = rect;
    rec["status"] = rules && fomin && rect ? "pass" : "fail";
    return {rec};
  } catch (const std::exception& e) {
    return {failure(rec, e)};
  }
}

}  // namespace detail

/// Run one suite. Records reach `sink` (if given) in canonical instance order while the sweep runs.
inline SweepReport run_sweep(const SweepOptions& o, const SchubertOracle& oracle, const std::function<void(const json&)>& sink = {}) {
  using detail::Task;
  const auto start = std::chrono::steady_clock::now();
  const long long cells_before = cells_cross_checked().load();
  std::vector<Task> tasks;
  if (o.suite == "speclrr") {
    for (const auto& I : detail::all_intervals(o, detail::eligible)) tasks.push_back([&oracle, I] { return detail::speclrr_instance(oracle, I); });
  } else if (o.suite == "beligan" || o.suite == "plactic") {
    auto intervals = detail::all_intervals(o);
    if (o.sample) {
      intervals.erase(std::remove_if(intervals.begin(), intervals.end(), [](const BruhatInterval& I) { return has_nesting(I); }), intervals.end());
    }
    for (const auto& I : intervals) {
      if (o.suite == "beligan") tasks.push_back([&oracle, I] { return detail::beligan_instance(oracle, I); });
      else tasks.push_back([I] { return detail::plactic_instance(I); });
    }
  } else if (o.suite == "lemmas") {
    for (const auto& I : detail::all_intervals(o)) tasks.push_back([I] { return detail::lemmas_instance(I); });
  } else if (o.suite == "conjecture-plr") {
    for (const auto& I : detail::all_intervals(o))
      for (const auto& lambda : partitions_of(length(I.w) - length(I.v), -1, I.k))
        tasks.push_back([&oracle, I, lambda] { return detail::conjecture_instance(oracle, I, lambda); });
  } else if (o.suite == "grassmannian") {
    for (int k : detail::ks_for(o)) {
      std::vector<Partition> shapes;
      for (int size = 0; size <= o.n; ++size)
        for (const auto& p : partitions_of(size, o.n - k, k)) shapes.push_back(p);
      for (const auto& nu : shapes)
        for (const auto& mu : subpartitions(nu)) tasks.push_back([n = o.n, k, mu, nu] { return detail::grassmannian_instance(n, k, mu, nu); });
    }
  } else {
    throw Error(ErrorCode::ParseError, "unknown suite '" + o.suite + "'");
  }
  if (o.sample) {
    std::vector<Task> chosen;
    for (std::size_t i : sample_indices(tasks.size(), o.sample, o.seed)) chosen.push_back(std::move(tasks[i]));
    tasks = std::move(chosen);
  }
  SweepReport report;
  report.summary.instances = static_cast<long long>(tasks.size());
  detail::run_tasks(tasks, o.jobs, [&](std::vector<json>& recs) {
    for (auto& r : recs) {
      report.summary.count(r.value("status", ""));
      if (sink) sink(r);
      report.records.push_back(std::move(r));
    }
  });
  report.summary.cells = cells_cross_checked().load() - cells_before;
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline json summary_record(const SweepOptions& o, const SweepReport& r) {
  json summary = {{"suite", o.suite}, {"n", o.n}, {"summary", r.summary}};
  if (o.sample) summary["sample"] = {{"size", o.sample}, {"seed", o.seed}};
  if (o.timing) summary["elapsed_ms"] = r.elapsed_ms;
  return summary;
}

/// JSON Lines: one record per line, then the summary line.
inline void write_report(std::ostream& out, const SweepOptions& o, const SweepReport& r) {
  for (const auto& rec : r.records) out << rec.dump() << "\n";
  out << summary_record(o, r).dump() << "\n";
}

}  // namespace bruhat_taquin
