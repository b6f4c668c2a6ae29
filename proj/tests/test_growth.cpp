#include <gtest/gtest.h>

#include "bruhat_taquin.hpp"
#include "oracles.hpp"

using namespace bruhat_taquin;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
Transposition T(int a, int b) { return Transposition(a, b); }

oracle::Word word(const Permutation& p) { return {p.word().begin(), p.word().end()}; }

GrowthDiagram paper_diagram() { return fill_growth(parse_chain(P("2143"), "2_4@1"), parse_chain(P("4123"), "1_2 2_3", 2)); }

/// Middle element of the cell by search over all of S_n: prefer the one that is not tau w.
std::optional<oracle::Word> brute_middle(const oracle::Word& w, const oracle::Word& mid, const oracle::Word& top, int k, int l) {
  std::optional<oracle::Word> fallback;
  for (const auto& y : oracle::all_words(static_cast<int>(w.size()))) {
    if (!oracle::k_cover(w, y, k) || !oracle::k_cover(y, top, l)) continue;
    if (y != mid) return y;
    fallback = y;
  }
  return fallback;
}

/// Structure constant c^w_{u,v} from compatible-sequence polynomials.
long long bjs_constant(const Permutation& u, const Permutation& v, const Permutation& w) {
  const auto e = oracle::expand(oracle::mul(oracle::bjs_schubert(word(u), 7), oracle::bjs_schubert(word(v), 7)));
  auto it = e.find(word(trimmed(w)));
  return it == e.end() ? 0 : it->second;
}

std::vector<BruhatInterval> eligible_intervals(int n) {
  std::vector<BruhatInterval> out;
  for (const auto& v : all_permutations(n))
    for (int k = 1; k < n; ++k) {
      if (!is_k_semi_shuffle(v, k) && !has_no_descents_before(v, k)) continue;
      for (const auto& w : upper_set(v, k)) out.push_back({v, w, k});
    }
  return out;
}

}  // namespace

TEST(LocalRule, Examples) {
  const auto j8 = local_rule(P("2143"), T(2, 4), T(1, 2), 2, 1);
  EXPECT_EQ(j8.rule, Rule::J8);
  EXPECT_EQ(j8.sigma, T(1, 4));
  EXPECT_EQ(j8.tau_prime, T(2, 4));
  const auto j2 = local_rule(P("2413"), T(2, 4), T(2, 3), 2, 1);
  EXPECT_EQ(j2.rule, Rule::J2);
  EXPECT_EQ(j2.sigma, T(2, 3));
  EXPECT_EQ(j2.tau_prime, T(3, 4));
  const auto j0 = local_rule(P("1234"), T(1, 2), T(3, 4), 3, 1);
  EXPECT_EQ(j0.rule, Rule::J0);
  EXPECT_EQ(j0.sigma, T(3, 4));
  EXPECT_EQ(j0.tau_prime, T(1, 2));
}

TEST(LocalRule, TagsRoundTrip) {
  for (Rule r : kAllRules) {
    EXPECT_EQ(parse_rule(to_string(r)), r);
    EXPECT_EQ(w0_partner(w0_partner(r)), r);
  }
  EXPECT_EQ(to_string(Rule::J5p), "J5'");
  EXPECT_THROW(parse_rule("J9"), Error);
}

TEST(LocalRule, AgreesWithBruteForceSearch) {
  for (int n = 3; n <= 5; ++n)
    for (const auto& w : all_permutations(n))
      for (int l = 1; l < n; ++l)
        for (const auto& left : bruhat_up_covers(w, l))
          for (int k = 1; k < n; ++k)
            for (const auto& up : bruhat_up_covers(left.to, k)) {
              const auto y = brute_middle(word(w), word(left.to), word(up.to), k, l);
              if (!y) {
                EXPECT_THROW(local_rule(w, left.values, up.values, k, l), Error);
                continue;
              }
              const auto r = local_rule(w, left.values, up.values, k, l);
              ASSERT_EQ(oracle::str(word(apply_value_transposition(w, r.sigma))), oracle::str(*y))
                  << w.to_string() << " " << left.values.to_string() << " " << up.values.to_string() << " k=" << k << " l=" << l;
              EXPECT_EQ(apply_value_transposition(apply_value_transposition(w, r.sigma), r.tau_prime), up.to);
            }
}

TEST(GrowthDiagram, WorkedExample) {
  const GrowthDiagram d = paper_diagram();
  EXPECT_EQ(d.grid, (std::vector<std::vector<Permutation>>{{P("2143"), P("4123")}, {P("2413"), P("4213")}, {P("3412"), P("4312")}}));
  EXPECT_EQ(d.bottom_row().to_string(), "1_4 2_3");
  EXPECT_EQ(d.right_column().to_string(), "3_4");
  EXPECT_EQ(d.fired_in_order(), (std::vector<Rule>{Rule::J8, Rule::J2}));
  EXPECT_TRUE(d.is_valid());
  EXPECT_EQ(d.k(), 2);
}

TEST(GrowthDiagram, EmptyDeltaReturnsGamma) {
  const ChainWord gamma = parse_chain(P("2143"), "1_4 2_3", 2);
  const GrowthDiagram d = fill_growth(ChainWord(P("2143"), {}), gamma);
  EXPECT_EQ(d.bottom_row(), gamma);
  const ChainWord empty_gamma(P("4123"), {});
  EXPECT_EQ(fill_growth(parse_chain(P("2143"), "2_4@1"), empty_gamma).bottom_row().length(), 0);
}

TEST(GrowthDiagram, BoundaryErrors) {
  EXPECT_THROW(fill_growth(parse_chain(P("2143"), "2_4@1"), parse_chain(P("2143"), "1_4", 2)), Error);
  EXPECT_THROW(fill_growth_diagram(parse_chain(P("2143"), "2_4@1"), parse_chain(P("4123"), "1_2@2 2_3@3"), 2), Error);
}

TEST(GrowthDiagram, Symmetry) {
  EXPECT_TRUE(jdt_symmetry_check(parse_chain(P("2143"), "2_4@1"), parse_chain(P("4123"), "1_2 2_3", 2), 2));
  for (const auto& I : eligible_intervals(4))
    for (const auto& [prop, delta] : admissible_deltas(I.v, I.k))
      for (const auto& g : enumerate_maximal_chains(I)) ASSERT_TRUE(jdt_symmetry_check(delta, g, I.k)) << delta.to_string() << " | " << g.to_string();
}

TEST(GrowthDiagram, ConjugationByLongestElement) {
  const GrowthDiagram c = conjugate_diagram_by_w0(paper_diagram());
  EXPECT_EQ(c.fired_in_order(), (std::vector<Rule>{Rule::J6, Rule::J4}));
  EXPECT_TRUE(w0_duality_check(paper_diagram()));
}

TEST(Lemmas, ExcludedRules) {
  EXPECT_EQ(rules_excluded_under_PL(), (std::set<Rule>{Rule::J3, Rule::J4, Rule::J6, Rule::J6p, Rule::J7, Rule::J8p}));
  EXPECT_EQ(rules_excluded_under_PR(), (std::set<Rule>{Rule::J1, Rule::J2, Rule::J8, Rule::J8p, Rule::J5, Rule::J6p}));
}

TEST(Lemmas, HoldOnS4) {
  for (const auto& I : eligible_intervals(4))
    for (const auto& [prop, delta] : admissible_deltas(I.v, I.k))
      for (const auto& g : enumerate_maximal_chains(I)) {
        const LemmaReport rep = lemma_checks(fill_growth_diagram(delta, g, I.k), prop);
        ASSERT_TRUE(rep.ok()) << rep.violations.front();
      }
}

TEST(Speclrr, AgainstCompatibleSequences) {
  for (const auto& I : eligible_intervals(4))
    for (const auto& [prop, delta] : admissible_deltas(I.v, I.k))
      for (const auto& r : speclrr_records(SchubertOracle(), delta, I)) {
        const Permutation u = partition_to_grassmannian(r.lambda, I.k, std::max(I.v.size(), I.k + r.lambda.part(1)));
        const long long c = bjs_constant(u, I.v, I.w);
        ASSERT_EQ(r.oracle, c);
        if (r.target) {
          ASSERT_EQ(r.count, c) << I.v.to_string() << " " << I.w.to_string() << " k=" << I.k << " " << r.lambda.to_string();
        }
      }
}

TEST(Speclrr, SmallCases) {
  SchubertOracle o;
  const BruhatInterval I{P("1324"), P("3412"), 2};
  const ChainWord pl = build_PL_chain(I.v, I.k);
  for (const auto& target : grassmannian_chains(Partition({2, 1}), 2, 4)) {
    const auto r = verify_speclrr(o, I, Partition({2, 1}), target, pl);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.oracle, 1);
  }
  // Wrong size: nothing lands on a chain of shape (1).
  const auto r = verify_speclrr(o, I, Partition({1}), grassmannian_chains(Partition({1}), 2, 4).front(), pl);
  EXPECT_EQ(r.count, 0);
  EXPECT_EQ(r.oracle, 0);
  EXPECT_THROW(verify_speclrr(o, I, Partition({1}), pl, parse_chain(P("1234"), "2_3@1")), Error);
}

TEST(Speclrr, DeltaIndependence) {
  const Permutation v = P("2413");
  ASSERT_TRUE(is_k_semi_shuffle(v, 2) && has_no_descents_before(v, 2));
  EXPECT_GE(admissible_deltas(v, 2).size(), 2u);
  for (const auto& w : upper_set(v, 2)) EXPECT_TRUE(delta_independence_check({v, w, 2})) << w.to_string();
}

TEST(Conjecture, HoldsOnS4) {
  SchubertOracle o;
  for (const auto& v : all_permutations(4))
    for (int k = 1; k < 4; ++k)
      for (const auto& w : upper_set(v, k))
        for (const auto& lambda : partitions_of(length(w) - length(v), -1, k)) {
          const auto r = verify_conjecture_plr(o, {v, w, k}, lambda);
          ASSERT_TRUE(r.pass()) << v.to_string() << " " << w.to_string() << " k=" << k << " " << lambda.to_string();
          EXPECT_GE(r.candidates, 1u);
        }
}

TEST(Plactic, JdtPreservesQ) {
  for (const auto& I : eligible_intervals(4))
    for (const auto& [prop, delta] : admissible_deltas(I.v, I.k)) {
      PlacticCache cache;
      const CheckOutcome q = presq_check(I, delta, cache);
      ASSERT_NE(q.status, CheckStatus::Fail) << q.reason;
      for (const auto& g : enumerate_maximal_chains(I)) {
        const CheckOutcome c = corpres_check(delta, g, I.k, cache);
        ASSERT_NE(c.status, CheckStatus::Fail) << c.reason;
      }
    }
}

TEST(Grassmannian, MatchesFomin) {
  const int n = 5, k = 2;
  for (int s = 1; s <= 4; ++s)
    for (const auto& nu : partitions_of(s, n - k, k))
      for (const auto& mu : subpartitions(nu)) {
        if (mu == nu) continue;
        for (const auto& S : all_standard_tableaux(SkewShape(mu)))
          for (const auto& Tt : all_standard_tableaux(SkewShape(nu, mu))) {
            const auto r = compare_with_fomin(chain_from_tableau(S), chain_from_tableau(Tt), k, n);
            ASSERT_TRUE(r.only_classical_rules && r.matches_fomin && r.matches_rectification) << Tt.to_string();
          }
      }
}
