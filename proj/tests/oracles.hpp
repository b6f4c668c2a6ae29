#pragma once

// Brute-force reference implementations used only by the tests. They work on plain
// vectors and share no code with the library.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Word = std::vector<int>;  // one-line notation, values 1..n
using Exponent = std::vector<int>;
using Poly = std::map<Exponent, long long>;

inline Word word_of(const std::string& s) {
  Word w;
  for (char c : s) w.push_back(c - '0');
  return w;
}

inline std::string str(const Word& w) {
  std::string s;
  for (int x : w) s += std::to_string(x);
  return s;
}

inline int inversions(const Word& w) {
  int n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) n += w[i] > w[j];
  return n;
}

inline Word swap_values(Word w, int a, int b) {
  for (int& x : w) {
    if (x == a) x = b;
    else if (x == b) x = a;
  }
  return w;
}

/// k-Bruhat cover by brute force: swapping two positions i <= k < j raises the inversion count by one.
inline bool k_cover(const Word& from, const Word& to, int k) {
  if (from.size() != to.size()) return false;
  std::vector<int> diff;
  for (std::size_t i = 0; i < from.size(); ++i)
    if (from[i] != to[i]) diff.push_back(static_cast<int>(i) + 1);
  if (diff.size() != 2) return false;
  if (!(diff[0] <= k && k < diff[1])) return false;
  return inversions(to) == inversions(from) + 1;
}

inline std::vector<Word> up_k_covers(const Word& w, int k) {
  std::vector<Word> out;
  for (int i = 1; i <= k; ++i)
    for (int j = k + 1; j <= static_cast<int>(w.size()); ++j) {
      Word x = w;
      std::swap(x[i - 1], x[j - 1]);
      if (inversions(x) == inversions(w) + 1) out.push_back(x);
    }
  return out;
}

/// Maximal chains of [v,w]_k as sequences of permutations.
inline std::vector<std::vector<Word>> k_chains(const Word& v, const Word& w, int k) {
  std::vector<std::vector<Word>> out;
  const int target = inversions(w);
  std::vector<Word> cur{v};
  std::function<void()> rec = [&] {
    const Word& last = cur.back();
    if (last == w) {
      out.push_back(cur);
      return;
    }
    if (inversions(last) >= target) return;
    for (const Word& x : up_k_covers(last, k)) {
      cur.push_back(x);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

/// Value transposition (a,b), a < b, separating consecutive chain members.
inline std::pair<int, int> step_values(const Word& from, const Word& to) {
  std::vector<int> vals;
  for (std::size_t i = 0; i < from.size(); ++i)
    if (from[i] != to[i]) vals.push_back(from[i]);
  std::sort(vals.begin(), vals.end());
  return {vals[0], vals[1]};
}

/// Some chain has consecutive steps a_d b_c or b_c a_d with a < b < c < d.
inline bool nesting_by_definition(const Word& v, const Word& w, int k) {
  for (const auto& chain : k_chains(v, w, k))
    for (std::size_t i = 0; i + 2 < chain.size(); ++i) {
      auto [p, q] = step_values(chain[i], chain[i + 1]);
      auto [r, s] = step_values(chain[i + 1], chain[i + 2]);
      if ((p < r && s < q) || (r < p && q < s)) return true;
    }
  return false;
}

inline Word identity(int n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

inline std::vector<Word> all_words(int n) {
  std::vector<Word> out;
  Word w = identity(n);
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Reduced words of w as sequences of simple reflection indices (w = s_{a1} ... s_{al}).
inline std::vector<Word> reduced_words(const Word& w) {
  static std::map<Word, std::vector<Word>> memo;
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  std::vector<Word> out;
  bool any = false;
  for (std::size_t d = 1; d < w.size(); ++d) {
    if (w[d - 1] < w[d]) continue;
    any = true;
    Word x = w;
    std::swap(x[d - 1], x[d]);  // w s_d
    for (Word r : reduced_words(x)) {
      r.push_back(static_cast<int>(d));
      out.push_back(std::move(r));
    }
  }
  if (!any) out.push_back({});
  return memo[w] = out;
}

/// Billey-Jockusch-Stanley: S_w = sum over reduced words a and compatible i_1 <= ... <= i_l,
/// i_j <= a_j, i_j < i_{j+1} whenever a_j < a_{j+1}, of x_{i_1} ... x_{i_l}.
inline Poly bjs_schubert(const Word& w, int nvars) {
  Poly out;
  for (const Word& a : reduced_words(w)) {
    const std::size_t l = a.size();
    Word i(l);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
      if (j == l) {
        Exponent e(std::max<std::size_t>(nvars, w.size()), 0);
        for (int x : i) ++e[x - 1];
        e.resize(nvars);
        ++out[e];
        return;
      }
      int lo = 1;
      if (j > 0) lo = a[j - 1] < a[j] ? i[j - 1] + 1 : i[j - 1];
      for (int x = lo; x <= a[j]; ++x) {
        i[j] = x;
        rec(j + 1);
      }
    };
    rec(0);
  }
  return out;
}

inline Poly mul(const Poly& f, const Poly& g) {
  Poly out;
  for (const auto& [e1, c1] : f)
    for (const auto& [e2, c2] : g) {
      Exponent e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out[e] += c1 * c2;
    }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

/// Permutation whose Lehmer code is `code`.
inline Word from_code(const Exponent& code) {
  if (code.empty()) return {1};
  const int n = static_cast<int>(code.size()) + 1;
  std::vector<int> avail = identity(n + *std::max_element(code.begin(), code.end()));
  Word w;
  for (int c : code) {
    w.push_back(avail[c]);
    avail.erase(avail.begin() + c);
  }
  for (int x : avail) w.push_back(x);
  while (w.size() > 1 && w.back() == static_cast<int>(w.size())) w.pop_back();
  return w;
}

/// Schubert expansion by peeling: the lex-smallest exponent is always the code of a basis element.
inline std::map<Word, long long> expand(Poly f) {
  std::map<Word, long long> out;
  while (!f.empty()) {
    const auto [e, c] = *f.begin();
    const Word w = from_code(e);
    out[w] += c;
    Poly s = bjs_schubert(w, static_cast<int>(e.size()));
    for (const auto& [se, sc] : s) {
      Exponent pe = se;
      pe.resize(e.size(), 0);
      f[pe] -= c * sc;
      if (f[pe] == 0) f.erase(pe);
    }
  }
  return out;
}

inline long long hook_length_count(const std::vector<int>& shape) {
  int n = std::accumulate(shape.begin(), shape.end(), 0);
  long long num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  long long den = 1;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) {
      int below = 0;
      for (std::size_t r2 = r + 1; r2 < shape.size() && shape[r2] > c; ++r2) ++below;
      den *= (shape[r] - c - 1) + below + 1;
    }
  return num / den;
}

/// Littlewood-Richardson number by enumerating semistandard fillings of nu/mu with content lambda
/// whose reverse reading word (right to left along rows, top row first) is a lattice word.
inline long long lr_coefficient(const std::vector<int>& lambda, const std::vector<int>& mu, const std::vector<int>& nu) {
  auto part = [](const std::vector<int>& p, std::size_t r) { return r < p.size() ? p[r] : 0; };
  for (std::size_t r = 0; r < std::max(mu.size(), nu.size()); ++r)
    if (part(mu, r) > part(nu, r)) return 0;
  if (std::accumulate(nu.begin(), nu.end(), 0) != std::accumulate(lambda.begin(), lambda.end(), 0) + std::accumulate(mu.begin(), mu.end(), 0))
    return 0;
  std::vector<std::pair<int, int>> boxes;  // reading order: rows top-down, right to left
  for (std::size_t r = 0; r < nu.size(); ++r)
    for (int c = nu[r] - 1; c >= part(mu, r); --c) boxes.emplace_back(static_cast<int>(r), c);
  std::map<std::pair<int, int>, int> fill;
  std::vector<int> used(lambda.size() + 1, 0);
  long long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == boxes.size()) {
      ++count;
      return;
    }
    const auto [r, c] = boxes[i];
    for (int x = 1; x <= static_cast<int>(lambda.size()); ++x) {
      if (used[x] >= lambda[x - 1]) continue;
      if (x > 1 && used[x] + 1 > used[x - 1]) continue;
      if (auto it = fill.find({r, c + 1}); it != fill.end() && it->second < x) continue;
      if (auto it = fill.find({r - 1, c}); it != fill.end() && it->second >= x) continue;
      fill[{r, c}] = x;
      ++used[x];
      rec(i + 1);
      --used[x];
      fill.erase({r, c});
    }
  };
  rec(0);
  return count;
}

}  // namespace oracle
