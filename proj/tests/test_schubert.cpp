#include <gtest/gtest.h>

#include "bruhat_taquin.hpp"
#include "oracles.hpp"

using namespace bruhat_taquin;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

oracle::Word word(const Permutation& p) { return {p.word().begin(), p.word().end()}; }

oracle::Poly as_oracle(const Polynomial& p) {
  oracle::Poly out;
  for (const auto& [e, c] : p.terms()) out[e] = c;
  return out;
}

std::map<std::string, long long> as_strings(const SchubertExpansion& e) {
  std::map<std::string, long long> out;
  for (const auto& [w, c] : e.terms()) out[w.to_string()] = c;
  return out;
}

std::map<std::string, long long> as_strings(const std::map<oracle::Word, long long>& e) {
  std::map<std::string, long long> out;
  for (const auto& [w, c] : e)
    if (c) out[oracle::str(w)] = c;
  return out;
}

}  // namespace

TEST(Polynomial, Arithmetic) {
  const Polynomial x1 = Polynomial::variable(1, 2), x2 = Polynomial::variable(2, 2);
  Polynomial s = x1;
  s += x2;
  EXPECT_EQ(s.to_string(), "x1 + x2");
  EXPECT_EQ((x1 * x1).to_string(), "x1^2");
  EXPECT_TRUE((s * s).is_homogeneous(2));
  Polynomial d = s;
  d -= x1;
  EXPECT_EQ(d, x2);
  EXPECT_EQ(Polynomial::constant(1).to_string(), "1");
  EXPECT_EQ(Polynomial(3).to_string(), "0");
}

TEST(Polynomial, DividedDifference) {
  const Polynomial x1 = Polynomial::variable(1, 3), x2 = Polynomial::variable(2, 3);
  Polynomial sym = x1;
  sym += x2;
  EXPECT_TRUE(sym.divided_difference(1).is_zero());
  EXPECT_TRUE(x1.divided_difference(2).is_zero());
  Polynomial expected = Polynomial::variable(1, 3);
  expected += Polynomial::variable(2, 3);
  EXPECT_EQ((x1 * x1).divided_difference(1), expected);
}

TEST(Polynomial, OverflowIsReported) {
  Polynomial p = Polynomial::constant(std::numeric_limits<Coefficient>::max());
  EXPECT_THROW(p += Polynomial::constant(1), Error);
}

TEST(Schubert, SmallPolynomials) {
  SchubertOracle o;
  EXPECT_EQ(o.schubert_polynomial(P("1234")).to_string(), "1");
  EXPECT_EQ(o.schubert_polynomial(P("213")).to_string(), "x1");
  EXPECT_EQ(o.schubert_polynomial(P("1324")).to_string(), "x1 + x2");
  EXPECT_EQ(o.schubert_polynomial(P("312")).to_string(), "x1^2");
  EXPECT_THROW(o.schubert_polynomial(P("1432"), 3), Error);
}

TEST(Schubert, MatchesCompatibleSequencesOnS5) {
  SchubertOracle o;
  for (const auto& w : all_permutations(5)) {
    const Polynomial p = o.schubert_polynomial(w, 5);
    EXPECT_EQ(as_oracle(p), oracle::bjs_schubert(word(w), 4)) << w.to_string();
    EXPECT_TRUE(p.is_homogeneous(length(w))) << w.to_string();
    for (const auto& [e, c] : p.terms()) EXPECT_GT(c, 0);
  }
}

TEST(Schubert, StableUnderEmbedding) {
  SchubertOracle o;
  for (const auto& w : all_permutations(4)) EXPECT_EQ(o.schubert_polynomial(w, 6), o.schubert_polynomial(embed(w, 6), 6));
}

TEST(Schubert, ExpandBasics) {
  SchubertOracle o;
  EXPECT_EQ(as_strings(o.expand(Polynomial::constant(1, 3))), (std::map<std::string, long long>{{"1", 1}}));
  const Polynomial x1 = Polynomial::variable(1, 3);
  EXPECT_EQ(as_strings(o.expand(x1 * x1)), (std::map<std::string, long long>{{"312", 1}}));
  Polynomial s = x1;
  s += Polynomial::variable(2, 3);
  const Polynomial f = x1 * s;
  const auto e = o.expand(f);
  EXPECT_EQ(as_strings(e), as_strings(oracle::expand(as_oracle(f))));
  Polynomial back(3);
  for (const auto& [w, c] : e.terms()) back += o.schubert_polynomial(w, 4).scaled(c).padded(3);
  EXPECT_EQ(back, f);
}

TEST(Schubert, StructureConstantsSmall) {
  SchubertOracle o;
  EXPECT_EQ(as_strings(o.structure_constants(P("213"), P("213"))), (std::map<std::string, long long>{{"312", 1}}));
  for (const auto& v : all_permutations(3)) EXPECT_EQ(as_strings(o.structure_constants(P("123"), v)), (std::map<std::string, long long>{{trimmed(v).to_string(), 1}}));
}

TEST(Schubert, StructureConstantsAgainstCompatibleSequences) {
  SchubertOracle o;
  int checked = 0;
  for (const auto& u : all_permutations(4))
    for (const auto& v : all_permutations(4)) {
      if (length(u) + length(v) > 6) continue;
      const auto expected = oracle::expand(oracle::mul(oracle::bjs_schubert(word(u), 6), oracle::bjs_schubert(word(v), 6)));
      ASSERT_EQ(as_strings(o.structure_constants(u, v)), as_strings(expected)) << u.to_string() << " * " << v.to_string();
      ++checked;
    }
  EXPECT_GT(checked, 300);
}

TEST(Schubert, ProductInvariantsOnS4) {
  SchubertOracle o;
  for (const auto& u : all_permutations(4))
    for (const auto& v : all_permutations(4)) {
      const SchubertExpansion e = o.structure_constants(u, v);
      EXPECT_EQ(e, o.structure_constants(v, u));
      Polynomial back(7 - 1);
      for (const auto& [w, c] : e.terms()) {
        EXPECT_GT(c, 0);
        EXPECT_EQ(length(w), length(u) + length(v));
        EXPECT_EQ(o.structure_constant(u, v, w), c) << u.to_string() << " " << v.to_string() << " " << w.to_string();
        back += o.schubert_polynomial(w, 7).scaled(c);
      }
      EXPECT_EQ(back, o.schubert_polynomial(u, 7) * o.schubert_polynomial(v, 7));
    }
}

TEST(Schubert, MonkRule) {
  SchubertOracle o;
  for (int k = 1; k <= 3; ++k) {
    const Permutation s = Permutation::identity(4).swap_positions(k, k + 1);
    for (const auto& v : all_permutations(4)) {
      std::map<std::string, long long> expected;
      for (const auto& e : bruhat_up_covers(embed(v, 5), k)) expected[trimmed(e.to).to_string()] = 1;
      EXPECT_EQ(as_strings(o.structure_constants(s, v)), expected) << v.to_string() << " k=" << k;
    }
  }
}

TEST(Schubert, VanishingOutsideKBruhat) {
  SchubertOracle o;
  const int n = 4;
  for (int k = 1; k < n; ++k)
    for (const auto& lambda : partitions_of(2, n - k, k)) {
      const Permutation u = partition_to_grassmannian(lambda, k, n);
      for (const auto& v : all_permutations(n)) {
        const SchubertExpansion e = o.structure_constants(u, v);
        for (const auto& [w, c] : e.terms()) {
          const Permutation we = embed(w, std::max(w.size(), n));
          EXPECT_FALSE(enumerate_maximal_chains({embed(v, we.size()), we, k}).empty()) << v.to_string() << " -> " << w.to_string();
          EXPECT_EQ(length(w) - length(v), lambda.size());
        }
      }
    }
}

TEST(Schubert, SchurPolynomials) {
  SchubertOracle o;
  EXPECT_TRUE(schur_vs_schubert_check(o, Partition({1}), 2, 4));
  EXPECT_TRUE(schur_vs_schubert_check(o, Partition(), 2, 4));
  EXPECT_TRUE(schur_vs_schubert_check(o, Partition({2, 1}), 2, 4));
  for (int k = 1; k <= 4; ++k)
    for (int size = 0; size <= 5; ++size)
      for (const auto& lambda : partitions_of(size, -1, k)) EXPECT_TRUE(schur_vs_schubert_check(o, lambda, k, 6)) << lambda.to_string() << " k=" << k;
}

TEST(Schubert, ClassicalLittlewoodRichardsonViaGrassmannians) {
  SchubertOracle o;
  const int k = 3, n = 7;
  for (int s = 0; s <= 3; ++s)
    for (const auto& lambda : partitions_of(s, n - k, k))
      for (int t = 0; t <= 3; ++t)
        for (const auto& mu : partitions_of(t, n - k, k))
          for (const auto& nu : partitions_of(s + t, n - k, k)) {
            const Coefficient c = o.structure_constant(partition_to_grassmannian(lambda, k, n), partition_to_grassmannian(mu, k, n), partition_to_grassmannian(nu, k, n));
            ASSERT_EQ(c, oracle::lr_coefficient(lambda.parts(), mu.parts(), nu.parts())) << lambda.to_string() << mu.to_string() << nu.to_string();
          }
}

TEST(Schubert, ConcurrentUseIsConsistent) {
  SchubertOracle shared;
  std::vector<std::thread> pool;
  std::vector<std::map<std::string, long long>> results(4);
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] { results[t] = as_strings(shared.structure_constants(P("2413"), P("3142"))); });
  for (auto& th : pool) th.join();
  SchubertOracle fresh;
  for (const auto& r : results) EXPECT_EQ(r, as_strings(fresh.structure_constants(P("2413"), P("3142"))));
}

TEST(SchubertCache, RoundTripAndDeterminism) {
  const auto dir = std::filesystem::temp_directory_path() / ("bt_cache_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto path = dir / "schubert.cache";
  SchubertOracle a;
  for (const auto& w : all_permutations(4)) a.schubert_polynomial(w);
  ASSERT_TRUE(save_cache(path, a).ok);
  SchubertOracle b;
  const CacheResult loaded = load_cache(path, b);
  ASSERT_TRUE(loaded.ok) << loaded.warning;
  EXPECT_EQ(loaded.records, a.snapshot().size());
  EXPECT_EQ(a.snapshot(), b.snapshot());
  ASSERT_TRUE(save_cache(dir / "again.cache", b).ok);
  std::ifstream f1(path), f2(dir / "again.cache");
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  EXPECT_EQ(s1.str(), s2.str());
  std::filesystem::remove_all(dir);
}

TEST(SchubertCache, BadFilesAreIgnored) {
  const auto dir = std::filesystem::temp_directory_path() / ("bt_cache_bad_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "old.cache") << "bruhat-taquin schubert cache v0\n213 1 1:1\n";
    std::ofstream(dir / "corrupt.cache") << kCacheHeader << "\n213 1 1:1\n312 2 2.0:x\n";
    std::ofstream(dir / "wrong.cache") << kCacheHeader << "\n213 1 1:1\n132 5 1.0.0.0.0:1\n";
  }
  for (const char* name : {"old.cache", "corrupt.cache", "wrong.cache"}) {
    SchubertOracle o;
    const CacheResult r = load_cache(dir / name, o);
    EXPECT_FALSE(r.ok) << name;
    EXPECT_FALSE(r.warning.empty());
    EXPECT_EQ(o.memo_size(), 0u) << name;
    EXPECT_EQ(o.schubert_polynomial(P("132")).to_string(), "x1 + x2");
  }
  SchubertOracle o;
  EXPECT_TRUE(load_cache(dir / "missing.cache", o).ok);
  EXPECT_FALSE(save_cache(dir / "no_such_dir" / "x.cache", o).ok);
  std::filesystem::remove_all(dir);
}
