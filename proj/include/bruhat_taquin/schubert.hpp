#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "bruhat_taquin/error.hpp"
#include "bruhat_taquin/partition.hpp"
#include "bruhat_taquin/permutation.hpp"
#include "bruhat_taquin/polynomial.hpp"

namespace bruhat_taquin {

inline Coefficient schubert_coefficient(Polynomial f, const Permutation& w);

/// Coefficients of a polynomial in the Schubert basis, keyed by trimmed permutations.
class SchubertExpansion {
 public:
  using Map = std::map<Permutation, Coefficient>;

  SchubertExpansion() = default;

  void add(const Permutation& w, Coefficient c) {
    if (c == 0) return;
    auto& slot = terms_[trimmed(w)];
    slot = detail::checked_add(slot, c);
    if (slot == 0) terms_.erase(trimmed(w));
  }

  Coefficient coefficient(const Permutation& w) const {
    auto it = terms_.find(trimmed(w));
    return it == terms_.end() ? 0 : it->second;
  }

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const SchubertExpansion&, const SchubertExpansion&) = default;

 private:
  Map terms_;
};

/// Exact Schubert-polynomial arithmetic used as ground truth for structure constants.
///
/// Schubert polynomials are computed by divided differences descending from the
/// longest element of the smallest S_N containing w; they are stable under
/// embedding, so the result is then padded to the requested variable count.
/// The memo store is safe for concurrent use.
class SchubertOracle {
 public:
  SchubertOracle() = default;
  SchubertOracle(const SchubertOracle&) = delete;
  SchubertOracle& operator=(const SchubertOracle&) = delete;

  /// Schubert polynomial of w over x_1..x_{m-1} (m >= size of w; default: w's own size).
  Polynomial schubert_polynomial(const Permutation& w, int m = 0) const {
    if (m == 0) m = w.size();
    if (m < trimmed(w).size()) throw Error(ErrorCode::SizeMismatch, "ambient S_" + std::to_string(m) + " too small for " + w.to_string());
    return memoized(trimmed(w)).padded(std::max(m - 1, 0));
  }

  /// Greedy expansion: S_w is x^code(w) plus lexicographically larger monomials, so the smallest
  /// monomial of f names the next basis element.
  SchubertExpansion expand(Polynomial f) const {
    SchubertExpansion out;
    while (!f.is_zero()) {
      const auto& [exponent, coeff] = *f.terms().begin();
      if (coeff < 0)
        throw Error(ErrorCode::NegativeCoefficient, "leading coefficient " + std::to_string(coeff) + " is negative");
      const Permutation w = from_lehmer_code(exponent);
      const Coefficient c = coeff;
      out.add(w, c);
      f -= memoized(trimmed(w)).scaled(c);
    }
    return out;
  }

  /// Product expansion S_u * S_v = sum_w c_{uv}^w S_w.
  SchubertExpansion structure_constants(const Permutation& u, const Permutation& v) const {
    const Permutation tu = trimmed(u);
    const Permutation tv = trimmed(v);
    const auto key = std::make_pair(tu, tv);
    {
      std::shared_lock lock(mutex_);
      auto it = products_.find(key);
      if (it != products_.end()) return it->second;
    }
    // Supported in S_{2n-1} for u, v in S_n: each x_i has degree at most 2(n-i) in the product.
    const int n = std::max(tu.size(), tv.size());
    const int m = std::max(2 * n - 1, 1);
    SchubertExpansion e = expand(schubert_polynomial(tu, m) * schubert_polynomial(tv, m));
    std::unique_lock lock(mutex_);
    products_.emplace(key, e);
    return e;
  }

  /// c_{uv}^w alone: apply the divided differences of w to S_u * S_v and read off the constant term.
  Coefficient structure_constant(const Permutation& u, const Permutation& v, const Permutation& w) const {
    if (length(u) + length(v) != length(w)) return 0;
    return schubert_coefficient(product(u, v), w);
  }

  /// S_u * S_v, memoized per ordered pair.
  Polynomial product(const Permutation& u, const Permutation& v) const {
    const auto key = std::make_pair(trimmed(u), trimmed(v));
    {
      std::shared_lock lock(mutex_);
      auto it = poly_products_.find(key);
      if (it != poly_products_.end()) return it->second;
    }
    Polynomial f = schubert_polynomial(key.first) * schubert_polynomial(key.second);
    std::unique_lock lock(mutex_);
    return poly_products_.emplace(key, std::move(f)).first->second;
  }

  /// Memo contents (trimmed permutation -> polynomial over its own variables).
  std::map<Permutation, Polynomial> snapshot() const {
    std::shared_lock lock(mutex_);
    return memo_;
  }

  void preload(const Permutation& w, Polynomial p) {
    std::unique_lock lock(mutex_);
    memo_.emplace(trimmed(w), std::move(p));
  }

  std::size_t memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
  }

 private:
  const Polynomial* lookup(const Permutation& w) const {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(w);
    return it == memo_.end() ? nullptr : &it->second;
  }

  const Polynomial& store(const Permutation& w, Polynomial p) const {
    std::unique_lock lock(mutex_);
    return memo_.emplace(w, std::move(p)).first->second;
  }

  /// w is trimmed; returns S_w over x_1..x_{N-1}, N = size of w.
  const Polynomial& memoized(const Permutation& w) const {
    if (const Polynomial* hit = lookup(w)) return *hit;
    const int n = w.size();
    // Climb to w0 through ascents, then come back down with divided differences.
    std::vector<Permutation> path{w};
    std::vector<int> steps;
    const Polynomial* base = nullptr;
    Polynomial top;
    while (true) {
      const Permutation& cur = path.back();
      if (const Polynomial* hit = lookup(trimmed(cur))) {
        base = hit;
        break;
      }
      const auto asc = ascents(cur);
      if (asc.empty()) {
        Polynomial::Exponent e(std::max(n - 1, 0));
        for (int i = 1; i < n; ++i) e[i - 1] = n - i;
        top = Polynomial::monomial(std::move(e));
        base = &store(trimmed(cur), top);
        break;
      }
      steps.push_back(asc.front());
      path.push_back(cur.swap_positions(asc.front(), asc.front() + 1));
    }
    Polynomial f = base->padded(std::max(n - 1, 0));
    const Polynomial* result = base;
    for (int s = static_cast<int>(steps.size()) - 1; s >= 0; --s) {
      f = f.divided_difference(steps[s]).padded(std::max(n - 1, 0));
      const Permutation key = trimmed(path[s]);
      result = &store(key, f.padded(std::max(key.size() - 1, 0)));
    }
    return *result;
  }

  mutable std::shared_mutex mutex_;
  mutable std::map<Permutation, Polynomial> memo_;
  mutable std::map<std::pair<Permutation, Permutation>, SchubertExpansion> products_;
  mutable std::map<std::pair<Permutation, Permutation>, Polynomial> poly_products_;
};

/// Coefficient of S_w in f (homogeneous of degree l(w)): peel descents of w with divided differences.
inline Coefficient schubert_coefficient(Polynomial f, const Permutation& w) {
  Permutation cur = w;
  while (true) {
    const auto d = descents(cur);
    if (d.empty()) break;
    f = f.divided_difference(d.front());
    cur = cur.swap_positions(d.front(), d.front() + 1);
  }
  return f.coefficient(Polynomial::Exponent(f.nvars(), 0));
}

/// Schur polynomial s_lambda(x_1..x_k) as the generating function of semistandard tableaux with entries <= k.
inline Polynomial schur_polynomial(const Partition& lambda, int k) {
  Polynomial out(k);
  if (lambda.length() > k) return out;
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= lambda.length(); ++r) rows.emplace_back(lambda.part(r), 0);
  std::vector<Box> cells;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c) cells.push_back({r, c});
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      Polynomial::Exponent e(k, 0);
      for (const auto& row : rows)
        for (int x : row) ++e[x - 1];
      out.add_term(std::move(e), 1);
      return;
    }
    const Box b = cells[idx];
    int lo = 1;
    if (b.col > 1) lo = std::max(lo, rows[b.row - 1][b.col - 2]);
    if (b.row > 1) lo = std::max(lo, rows[b.row - 2][b.col - 1] + 1);
    for (int x = lo; x <= k; ++x) {
      rows[b.row - 1][b.col - 1] = x;
      self(self, idx + 1);
    }
    rows[b.row - 1][b.col - 1] = 0;
  };
  rec(rec, 0);
  return out;
}

/// The Schubert polynomial of the Grassmannian permutation v(lambda, k) equals s_lambda(x_1..x_k).
inline bool schur_vs_schubert_check(const SchubertOracle& oracle, const Partition& lambda, int k, int m) {
  const int n = std::max(m, k + std::max(lambda.part(1), 1));
  const Permutation v = partition_to_grassmannian(lambda, k, n);
  return oracle.schubert_polynomial(v, n) == schur_polynomial(lambda, k);
}

}  // namespace bruhat_taquin
