#pragma once

// Dense univariate integer polynomials in s. Used for the denominators of
// rational functions and for gcd computations.

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "laurent.hpp"

namespace skein {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// Splits an s-only Laurent polynomial as s^shift · P with P(0) ≠ 0.
  /// The zero polynomial maps to (0, 0).
  static std::pair<UPoly, int> from_laurent(const LaurentPolynomial& f) {
    if (f.is_zero()) return {UPoly(), 0};
    if (!f.is_s_only()) throw NotSUnivariate("polynomial involves a, a_L or γ: " + f.to_string());
    int lo = f.terms().begin()->first.s;
    int hi = f.terms().rbegin()->first.s;
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, v] : f.terms()) c[static_cast<std::size_t>(e.s - lo)] = v;
    return {UPoly(std::move(c)), lo};
  }

  /// s^shift · P as a Laurent polynomial, optionally times the (a, a_L, γ) monomial `extra`.
  LaurentPolynomial to_laurent(int shift = 0, const Exponent& extra = {}) const {
    std::vector<std::pair<Exponent, Integer>> pairs;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != 0) {
        Exponent e = extra;
        e.s += static_cast<int>(i) + shift;
        pairs.emplace_back(e, c_[i]);
      }
    }
    return LaurentPolynomial::from_terms(pairs);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Integer& lead() const { return c_.back(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }

  Integer content() const {
    Integer g = 0;
    for (const auto& v : c_) {
      g = detail::integer_gcd(g, v);
      if (g == 1) break;
    }
    return g;
  }

  /// Primitive part with positive leading coefficient.
  UPoly primitive() const {
    if (is_zero()) return {};
    Integer g = content();
    if (lead() < 0) g = -g;
    UPoly r = *this;
    for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return r;
  }

  UPoly scaled(const Integer& k) const {
    if (k == 0) return {};
    UPoly r = *this;
    for (auto& v : r.c_) v *= k;
    return r;
  }

  UPoly divided_exactly(const Integer& k) const {
    UPoly r = *this;
    for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
    return r;
  }

  UPoly operator-() const { return scaled(-1); }

  friend UPoly operator*(const UPoly& x, const UPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<Integer> r(x.c_.size() + y.c_.size() - 1);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
    }
    return UPoly(std::move(r));
  }

  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Pseudo-remainder of f by g: lc(g)^k · f mod g for a suitable k.
  static UPoly pseudo_remainder(UPoly f, const UPoly& g) {
    if (g.is_zero()) throw DivisionByZero();
    const int dg = g.degree();
    const Integer& lg = g.lead();
    while (!f.is_zero() && f.degree() >= dg) {
      const int shift = f.degree() - dg;
      Integer lf = f.lead();
      for (auto& v : f.c_) v *= lg;
      for (int i = 0; i <= dg; ++i) f.c_[static_cast<std::size_t>(i + shift)] -= lf * g.c_[static_cast<std::size_t>(i)];
      f.trim();
    }
    return f;
  }

  /// Quotient f / g, which must be exact over ℤ.
  static UPoly exact_quotient(const UPoly& f, const UPoly& g) {
    if (g.is_zero()) throw DivisionByZero();
    if (f.is_zero()) return {};
    if (f.degree() < g.degree()) throw std::logic_error("inexact polynomial division");
    std::vector<Integer> rem = f.c_;
    std::vector<Integer> quo(static_cast<std::size_t>(f.degree() - g.degree() + 1));
    const int dg = g.degree();
    for (int k = f.degree() - dg; k >= 0; --k) {
      Integer& top = rem[static_cast<std::size_t>(k + dg)];
      if (top == 0) continue;
      if (!mpz_divisible_p(top.get_mpz_t(), g.lead().get_mpz_t())) {
        throw std::logic_error("inexact polynomial division");
      }
      Integer q = top / g.lead();
      for (int i = 0; i <= dg; ++i) rem[static_cast<std::size_t>(k + i)] -= q * g.c_[static_cast<std::size_t>(i)];
      quo[static_cast<std::size_t>(k)] = q;
    }
    for (const auto& v : rem) {
      if (v != 0) throw std::logic_error("inexact polynomial division");
    }
    return UPoly(std::move(quo));
  }

  /// Primitive gcd with positive leading coefficient (primitive remainder sequence).
  /// gcd(f, 0) is the primitive part of f; gcd(0, 0) = 0.
  static UPoly gcd(const UPoly& f, const UPoly& g) {
    UPoly x = f.primitive();
    UPoly y = g.primitive();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
      if (y.degree() == 0) return UPoly({Integer(1)});
      UPoly r = pseudo_remainder(x, y).primitive();
      x = std::move(y);
      y = std::move(r);
    }
    return x;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;
};

}  // namespace skein
