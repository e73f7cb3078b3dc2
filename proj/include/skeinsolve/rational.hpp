#pragma once

// Rational functions N/D with N ∈ ℤ[s^{±1}, a^{±1}, a_L^{±1}, γ^{±1}] and D ∈ ℤ[s].
//
// Reduced form: D has nonnegative s-powers, D(0) ≠ 0 and a positive leading
// coefficient; N and D are divided by the gcd of D with every (a, a_L, γ)
// coefficient slice of N, and by the common integer content. Equality never
// depends on the reduction: rf_equal cross-multiplies.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "upoly.hpp"

namespace skein {

namespace detail {

/// N = Σ_key key · s^shift · slice_key(s), with each slice a dense polynomial.
struct SlicedPolynomial {
  int shift = 0;
  std::map<Exponent, UPoly> slices;
};

inline SlicedPolynomial slice(const LaurentPolynomial& f) {
  SlicedPolynomial out;
  if (f.is_zero()) return out;
  int lo = f.terms().begin()->first.s;
  for (const auto& [e, c] : f.terms()) lo = std::min(lo, e.s);
  out.shift = lo;
  std::map<Exponent, std::vector<Integer>> dense;
  for (const auto& [e, c] : f.terms()) {
    auto& v = dense[e.without_s()];
    auto idx = static_cast<std::size_t>(e.s - lo);
    if (v.size() <= idx) v.resize(idx + 1);
    v[idx] = c;
  }
  for (auto& [key, v] : dense) out.slices.emplace(key, UPoly(std::move(v)));
  return out;
}

inline LaurentPolynomial unslice(const SlicedPolynomial& sp) {
  LaurentPolynomial r;
  for (const auto& [key, p] : sp.slices) r += p.to_laurent(sp.shift, key);
  return r;
}

/// Exact quotient f / k in the Laurent ring, or nullopt when k does not divide f.
inline std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& f,
                                                     const LaurentPolynomial& k) {
  if (k.is_zero()) throw DivisionByZero();
  if (f.is_zero()) return LaurentPolynomial();
  const Exponent mk = k.min_exponent();
  const Exponent mf = f.min_exponent();
  const LaurentPolynomial divisor = k.shifted(-mk);
  LaurentPolynomial rem = f.shifted(-mf);
  LaurentPolynomial quo;
  const Exponent lk = divisor.leading().first;
  const Integer ck = divisor.leading().second;
  while (!rem.is_zero()) {
    const Exponent lr = rem.leading().first;
    const Integer cr = rem.leading().second;
    const Exponent d = lr - lk;
    for (Variable v : kVariables) {
      if (d[v] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(cr.get_mpz_t(), ck.get_mpz_t())) return std::nullopt;
    LaurentPolynomial t = LaurentPolynomial::monomial(d, Integer(cr / ck));
    quo += t;
    rem -= t * divisor;
  }
  return quo.shifted(mf - mk);
}

}  // namespace detail

/// Primitive gcd over ℚ of two s-only Laurent polynomials, with positive
/// leading coefficient and nonzero constant term.
inline LaurentPolynomial gcd_s(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (!f.is_s_only() || !g.is_s_only()) {
    throw NotSUnivariate("gcd_s requires polynomials in s only");
  }
  auto [pf, sf] = UPoly::from_laurent(f);
  auto [pg, sg] = UPoly::from_laurent(g);
  return UPoly::gcd(pf, pg).to_laurent();
}

class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(LaurentPolynomial num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)), den_(1) {}
  /// num / den. Throws DivisionByZero, or DenominatorNotSUnivariate when the
  /// reduced quotient would need a, a_L or γ in the denominator.
  RationalFunction(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    assign_quotient(num, den);
  }

  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the value is a Laurent polynomial (denominator 1).
  bool is_polynomial() const { return den_.is_one(); }

  friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_ == y.den_) return from_parts(x.num_ + y.num_, x.den_);
    auto [dx, sx] = UPoly::from_laurent(x.den_);
    auto [dy, sy] = UPoly::from_laurent(y.den_);
    UPoly g = UPoly::gcd(dx, dy);
    UPoly cx = UPoly::exact_quotient(dy, g);  // cofactor for x
    UPoly cy = UPoly::exact_quotient(dx, g);
    LaurentPolynomial num = x.num_ * cx.to_laurent() + y.num_ * cy.to_laurent();
    return from_parts(std::move(num), (dx * cx).to_laurent());
  }
  friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
    return x + (-y);
  }
  friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (x.den_.is_one() && y.den_.is_one()) return RationalFunction(x.num_ * y.num_);
    return from_parts(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
    if (y.is_zero()) throw DivisionByZero();
    return RationalFunction(x.num_ * y.den_, x.den_ * y.num_);
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction pow(int n) const {
    if (n < 0) return RationalFunction(1) / pow(-n);
    RationalFunction r = 1;
    for (int k = 0; k < n; ++k) r *= *this;
    return r;
  }

  /// Cross-multiplied equality; independent of how far either side is reduced.
  friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
    return x.num_ * y.den_ == y.num_ * x.den_;
  }

  Rational evaluate(const EvaluationPoint& at) const {
    Rational d = den_.evaluate(at);
    if (d == 0) throw DivisionByZero();
    return num_.evaluate(at) / d;
  }

  /// Display form. The denominator is shown balanced (multiplied by s^{-deg/2}
  /// when its degree is even) with highest powers first, so 1/z reads
  /// "1/(q^{1/2} − q^{-1/2})". The numerator uses the canonical ascending order.
  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    LaurentPolynomial n = num_;
    LaurentPolynomial d = den_;
    const int deg = den_.terms().rbegin()->first.s;
    if (deg % 2 == 0) {
      Exponent shift{-deg / 2, 0, 0, 0};
      n = n.shifted(shift);
      d = d.shifted(shift);
    }
    std::string ns = n.to_string();
    if (n.size() > 1) ns = "(" + ns + ")";
    std::string ds = d.to_string_descending();
    if (d.size() > 1) ds = "(" + ds + ")";
    return ns + "/" + ds;
  }

  /// Builds num/den where den is s-only, then normalizes.
  static RationalFunction from_parts(LaurentPolynomial num, LaurentPolynomial den) {
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize();
    return r;
  }

 private:
  void assign_quotient(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    if (den.is_zero()) throw DivisionByZero();
    if (den.is_s_only()) {
      num_ = num;
      den_ = den;
      normalize();
      return;
    }
    // den = content · c(s) · K with K primitive; K must divide num or be a unit.
    const Integer content = den.content();
    detail::SlicedPolynomial sd = detail::slice(den.divided_exactly(content));
    UPoly c;
    for (const auto& [key, p] : sd.slices) c = UPoly::gcd(c, p);
    for (auto& [key, p] : sd.slices) p = UPoly::exact_quotient(p, c);
    LaurentPolynomial k = detail::unslice(sd);
    std::optional<LaurentPolynomial> q = detail::exact_divide(num, k);
    if (!q) {
      throw DenominatorNotSUnivariate("quotient needs a, a_L or γ in the denominator: (" +
                                      num.to_string() + ")/(" + den.to_string() + ")");
    }
    num_ = std::move(*q);
    den_ = c.scaled(content).to_laurent();
    normalize();
  }

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (!den_.is_s_only()) throw DenominatorNotSUnivariate("denominator " + den_.to_string());
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    auto [d, dshift] = UPoly::from_laurent(den_);
    detail::SlicedPolynomial sn = detail::slice(num_);
    sn.shift -= dshift;
    if (d.degree() > 0) {
      UPoly g = d;
      for (const auto& [key, p] : sn.slices) {
        g = UPoly::gcd(g, p);
        if (g.degree() == 0) break;
      }
      if (g.degree() > 0) {
        d = UPoly::exact_quotient(d, g);
        for (auto& [key, p] : sn.slices) p = UPoly::exact_quotient(p, g);
      }
    }
    Integer k = d.content();
    for (const auto& [key, p] : sn.slices) {
      if (k == 1) break;
      k = detail::integer_gcd(k, p.content());
    }
    if (d.lead() < 0) k = -k;
    if (k != 1) {
      d = d.divided_exactly(k);
      for (auto& [key, p] : sn.slices) p = p.divided_exactly(k);
    }
    num_ = detail::unslice(sn);
    den_ = d.to_laurent();
  }

  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

enum class ArithOp { add, mul, div };

inline RationalFunction rf_arith(ArithOp op, const RationalFunction& x, const RationalFunction& y) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
  }
  throw std::logic_error("bad ArithOp");
}

inline bool rf_equal(const RationalFunction& x, const RationalFunction& y) { return x == y; }

/// Ring endomorphism sending each listed variable to ± a monomial (and its
/// inverse to the inverse monomial). Unlisted variables are fixed.
using Substitution = std::map<Variable, SignedMonomial>;

inline LaurentPolynomial substitute(const LaurentPolynomial& f, const Substitution& sub) {
  std::vector<std::pair<Exponent, Integer>> out;
  out.reserve(f.size());
  for (const auto& [e, c] : f.terms()) {
    Exponent img{};
    int sign = 1;
    for (Variable v : kVariables) {
      const int k = e[v];
      if (k == 0) continue;
      auto it = sub.find(v);
      if (it == sub.end()) {
        img[v] += k;
        continue;
      }
      const SignedMonomial m = it->second.pow(k);
      sign *= m.sign;
      img = img + m.exponent;
    }
    out.emplace_back(img, sign > 0 ? c : Integer(-c));
  }
  return LaurentPolynomial::from_terms(out);
}

/// Applies the substitution to numerator and denominator. The image of the
/// denominator must be ± a unit times an s-only polynomial.
inline RationalFunction substitute(const RationalFunction& x, const Substitution& sub) {
  LaurentPolynomial n = substitute(x.numerator(), sub);
  LaurentPolynomial d = substitute(x.denominator(), sub);
  const Exponent unit = d.terms().begin()->first.without_s();
  for (const auto& [e, c] : d.terms()) {
    if (e.without_s() != unit) {
      throw IllegalSubstitution("denominator becomes " + d.to_string());
    }
  }
  return RationalFunction::from_parts(n.shifted(-unit), d.shifted(-unit));
}

/// Probabilistic equality test by evaluation at random rational points.
/// A false result is definitive; true means equal with high probability.
inline bool probably_equal(const RationalFunction& x, const RationalFunction& y, int trials = 4,
                           std::uint64_t seed = 0x5eed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-97, 97);
  std::uniform_int_distribution<int> den(1, 89);
  auto pick = [&] {
    Rational r;
    do {
      r = Rational(num(rng), den(rng));
      r.canonicalize();
    } while (r == 0 || r == 1 || r == -1);
    return r;
  };
  for (int t = 0; t < trials; ++t) {
    EvaluationPoint p{pick(), pick(), pick(), pick()};
    Rational dx = x.denominator().evaluate(p);
    Rational dy = y.denominator().evaluate(p);
    if (dx == 0 || dy == 0) continue;
    if (x.numerator().evaluate(p) * dy != y.numerator().evaluate(p) * dx) return false;
  }
  return true;
}

}  // namespace skein
