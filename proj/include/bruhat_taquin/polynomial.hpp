#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bruhat_taquin/error.hpp"

namespace bruhat_taquin {

using Coefficient = std::int64_t;

namespace detail {
inline Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::ArithmeticOverflow, "coefficient addition overflowed");
  return r;
}
inline Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::ArithmeticOverflow, "coefficient multiplication overflowed");
  return r;
}
}  // namespace detail

/// Sparse polynomial in x_1..x_m with exact integer coefficients.
/// Terms are keyed by exponent vectors of length m; the map order is lexicographic
/// with x_1 heaviest, so the leading term is the last one.
class Polynomial {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, Coefficient>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(Coefficient c, int nvars = 0) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  static Polynomial monomial(Exponent e, Coefficient c = 1) {
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(std::move(e), c);
    return p;
  }

  /// x_i (1-indexed).
  static Polynomial variable(int i, int nvars) {
    Exponent e(nvars, 0);
    e[i - 1] = 1;
    return monomial(std::move(e));
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(Exponent e, Coefficient c) {
    if (static_cast<int>(e.size()) != nvars_) throw Error(ErrorCode::SizeMismatch, "exponent length differs from variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Coefficient coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Same polynomial over more variables.
  Polynomial padded(int nvars) const {
    if (nvars < nvars_) {
      Polynomial out(nvars);
      for (const auto& [e, c] : terms_) {
        for (int i = nvars; i < nvars_; ++i)
          if (e[i] != 0) throw Error(ErrorCode::SizeMismatch, "polynomial uses variables beyond x_" + std::to_string(nvars));
        out.terms_.emplace(Exponent(e.begin(), e.begin() + nvars), c);
      }
      return out;
    }
    Polynomial out(nvars);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      f.resize(nvars, 0);
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  /// Number of variables actually used (index of the last variable with a nonzero exponent).
  int support_vars() const {
    int m = 0;
    for (const auto& [e, c] : terms_)
      for (int i = nvars_; i > m; --i)
        if (e[i - 1] != 0) {
          m = i;
          break;
        }
    return m;
  }

  bool is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (int x : e) d += x;
      if (d != degree) return false;
    }
    return true;
  }

  /// (f - s_i f) / (x_i - x_{i+1}), computed termwise; exact.
  Polynomial divided_difference(int i) const {
    if (i < 1 || i + 1 > nvars_) {
      // f does not involve x_{i+1} as a variable slot; widen first.
      return padded(std::max(nvars_, i + 1)).divided_difference(i);
    }
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      const int a = e[i - 1];
      const int b = e[i];
      if (a == b) continue;
      const int lo = std::min(a, b);
      const int span = std::abs(a - b);
      const Coefficient sign = a > b ? c : -c;
      // x^lo y^lo (x^span - y^span)/(x - y) = x^lo y^lo sum_j x^(span-1-j) y^j
      for (int j = 0; j < span; ++j) {
        Exponent f = e;
        f[i - 1] = lo + span - 1 - j;
        f[i] = lo + j;
        out.add_term(std::move(f), sign);
      }
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    align(o);
    for (const auto& [e, c] : o.padded(nvars_).terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    align(o);
    for (const auto& [e, c] : o.padded(nvars_).terms_) add_term(e, -c);
    return *this;
  }

  Polynomial scaled(Coefficient s) const {
    Polynomial out(nvars_);
    if (s == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, detail::checked_mul(c, s));
    return out;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const int m = std::max(a.nvars_, b.nvars_);
    const Polynomial pa = a.padded(m);
    const Polynomial pb = b.padded(m);
    Polynomial out(m);
    for (const auto& [ea, ca] : pa.terms_)
      for (const auto& [eb, cb] : pb.terms_) {
        Exponent e(m);
        for (int i = 0; i < m; ++i) e[i] = ea[i] + eb[i];
        out.add_term(std::move(e), detail::checked_mul(ca, cb));
      }
    return out;
  }

  /// Equality up to padding with unused variables.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    const int m = std::max(a.nvars_, b.nvars_);
    return a.padded(m).terms_ == b.padded(m).terms_;
  }

  /// "x1^2 + 2 x1 x2 - x3", terms in decreasing lexicographic order; "0" when zero.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      const Coefficient mag = c < 0 ? -c : c;
      if (first) s += c < 0 ? "-" : "";
      else s += c < 0 ? " - " : " + ";
      if (mono.empty()) s += std::to_string(mag);
      else s += (mag == 1 ? std::string() : std::to_string(mag) + "*") + mono;
      first = false;
    }
    return s;
  }

 private:
  void align(const Polynomial& o) {
    if (o.nvars_ > nvars_) *this = padded(o.nvars_);
  }

  int nvars_ = 0;
  Terms terms_;
};

}  // namespace bruhat_taquin
