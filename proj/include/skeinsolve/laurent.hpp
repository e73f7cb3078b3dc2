#pragma once

// Exact multivariate Laurent polynomials in s = q^{1/2}, a, a_L and γ with
// arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <compare>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "errors.hpp"

namespace skein {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Variable { s, a, aL, g };

inline constexpr std::array<Variable, 4> kVariables{Variable::s, Variable::a, Variable::aL,
                                                    Variable::g};

/// Exponent vector of the monomial s^s a^a a_L^aL γ^g. Powers of q are even
/// powers of s. The defaulted ordering is lexicographic in (s, a, aL, g).
struct Exponent {
  int s = 0;
  int a = 0;
  int aL = 0;
  int g = 0;

  auto operator<=>(const Exponent&) const = default;

  int& operator[](Variable v) {
    switch (v) {
      case Variable::s: return s;
      case Variable::a: return a;
      case Variable::aL: return aL;
      case Variable::g: return g;
    }
    throw std::logic_error("bad variable");
  }
  int operator[](Variable v) const { return const_cast<Exponent&>(*this)[v]; }

  Exponent operator+(const Exponent& o) const { return {s + o.s, a + o.a, aL + o.aL, g + o.g}; }
  Exponent operator-(const Exponent& o) const { return {s - o.s, a - o.a, aL - o.aL, g - o.g}; }
  Exponent operator-() const { return {-s, -a, -aL, -g}; }
  Exponent operator*(int k) const { return {s * k, a * k, aL * k, g * k}; }

  bool is_zero() const { return s == 0 && a == 0 && aL == 0 && g == 0; }
  bool s_only() const { return a == 0 && aL == 0 && g == 0; }
  /// The (a, a_L, γ) part, with the s exponent cleared.
  Exponent without_s() const { return {0, a, aL, g}; }
};

/// Values for the four variables, used for numeric spot checks.
struct EvaluationPoint {
  Rational s{1};
  Rational a{1};
  Rational aL{1};
  Rational g{1};

  const Rational& operator[](Variable v) const {
    switch (v) {
      case Variable::s: return s;
      case Variable::a: return a;
      case Variable::aL: return aL;
      case Variable::g: return g;
    }
    throw std::logic_error("bad variable");
  }
};

namespace detail {

inline Integer integer_gcd(const Integer& x, const Integer& y) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return r;
}

inline Rational rational_power(const Rational& x, int e) {
  if (e < 0 && x == 0) throw DivisionByZero();
  Rational base = e < 0 ? Rational(1 / x) : x;
  Rational r = 1;
  for (int k = std::abs(e); k > 0; --k) r *= base;
  return r;
}

inline std::string power_suffix(int e) {
  if (e == 1) return "";
  if (e >= 2 && e <= 9) return "^" + std::to_string(e);
  return "^{" + std::to_string(e) + "}";
}

inline std::string q_factor(int s_exp) {
  if (s_exp == 0) return "";
  if (s_exp % 2 == 0) return "q" + power_suffix(s_exp / 2);
  return "q^{" + std::to_string(s_exp) + "/2}";
}

inline std::string monomial_factors(const Exponent& e) {
  std::string out;
  if (e.a != 0) out += "a" + power_suffix(e.a);
  if (e.aL != 0) out += "a_L" + power_suffix(e.aL);
  if (e.g != 0) out += "γ" + power_suffix(e.g);
  out += q_factor(e.s);
  return out;
}

inline std::string render_term(const Exponent& e, const Integer& c, bool leading) {
  Integer mag = abs(c);
  std::string factors = monomial_factors(e);
  std::string body;
  if (factors.empty()) {
    body = mag.get_str();
  } else {
    body = (mag == 1 ? std::string() : mag.get_str()) + factors;
  }
  if (leading) return (c < 0 ? "−" : "") + body;
  return (c < 0 ? " − " : " + ") + body;
}

}  // namespace detail

class LaurentPolynomial {
 public:
  using Terms = std::map<Exponent, Integer>;

  LaurentPolynomial() = default;
  LaurentPolynomial(long c) { add_term({}, Integer(c)); }  // NOLINT(google-explicit-constructor)
  explicit LaurentPolynomial(const Integer& c) { add_term({}, c); }

  static LaurentPolynomial monomial(const Exponent& e, const Integer& c = 1) {
    LaurentPolynomial p;
    p.add_term(e, c);
    return p;
  }
  static LaurentPolynomial variable(Variable v, int power = 1) {
    Exponent e;
    e[v] = power;
    return monomial(e);
  }
  static LaurentPolynomial s(int k = 1) { return variable(Variable::s, k); }
  /// q^k = s^{2k}.
  static LaurentPolynomial q(int k = 1) { return variable(Variable::s, 2 * k); }
  static LaurentPolynomial a(int k = 1) { return variable(Variable::a, k); }
  static LaurentPolynomial aL(int k = 1) { return variable(Variable::aL, k); }
  static LaurentPolynomial gamma(int k = 1) { return variable(Variable::g, k); }

  /// Builds from arbitrary (exponent, coefficient) pairs; repeated exponents accumulate.
  template <typename Range>
  static LaurentPolynomial from_terms(const Range& pairs) {
    LaurentPolynomial p;
    for (const auto& [e, c] : pairs) p.add_term(e, Integer(c));
    return p;
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_zero() && terms_.begin()->second == 1;
  }
  bool is_s_only() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.s_only(); });
  }

  Integer coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Largest term in lexicographic (s, a, aL, g) order. Requires nonzero.
  const std::pair<const Exponent, Integer>& leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  /// Componentwise minimum of the exponents. Requires nonzero.
  Exponent min_exponent() const {
    if (terms_.empty()) throw std::logic_error("min exponent of zero polynomial");
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
      for (Variable v : kVariables) m[v] = std::min(m[v], e[v]);
    }
    return m;
  }

  /// Multiplication by the monomial with exponent e.
  LaurentPolynomial shifted(const Exponent& by) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
    return r;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }
  LaurentPolynomial scaled(const Integer& k) const {
    LaurentPolynomial r;
    if (k == 0) return r;
    r = *this;
    for (auto& [e, c] : r.terms_) c *= k;
    return r;
  }
  /// Exact division of every coefficient by k. Throws if some coefficient is not divisible.
  LaurentPolynomial divided_exactly(const Integer& k) const {
    LaurentPolynomial r = *this;
    for (auto& [e, c] : r.terms_) {
      if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t())) {
        throw std::logic_error("inexact integer division of polynomial");
      }
      c /= k;
    }
    return r;
  }
  /// gcd of the coefficients (nonnegative; 0 for the zero polynomial).
  Integer content() const {
    Integer g = 0;
    for (const auto& [e, c] : terms_) {
      g = detail::integer_gcd(g, c);
      if (g == 1) break;
    }
    return g;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial x, const LaurentPolynomial& y) {
    return x += y;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial x, const LaurentPolynomial& y) {
    return x -= y;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& x, const LaurentPolynomial& y) {
    LaurentPolynomial r;
    for (const auto& [ex, cx] : x.terms_) {
      for (const auto& [ey, cy] : y.terms_) r.add_term(ex + ey, cx * cy);
    }
    return r;
  }
  LaurentPolynomial operator-() const {
    LaurentPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  LaurentPolynomial pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power of a polynomial");
    LaurentPolynomial r = 1;
    for (int k = 0; k < n; ++k) r *= *this;
    return r;
  }

  Rational evaluate(const EvaluationPoint& at) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (Variable v : kVariables) {
        if (e[v] != 0) t *= detail::rational_power(at[v], e[v]);
      }
      total += t;
    }
    return total;
  }

  /// Canonical rendering: terms ascending in (s, a, aL, g), e.g. "q^{-1} + 2 + q".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [e, c] : terms_) {
      out += detail::render_term(e, c, leading);
      leading = false;
    }
    return out;
  }

  /// Same terms as to_string() but highest powers first.
  std::string to_string_descending() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool leading = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      out += detail::render_term(it->first, it->second, leading);
      leading = false;
    }
    return out;
  }

 private:
  void add_term(const Exponent& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// ±1 times a single Laurent monomial.
struct SignedMonomial {
  int sign = 1;
  Exponent exponent{};

  auto operator<=>(const SignedMonomial&) const = default;

  LaurentPolynomial to_polynomial() const {
    return LaurentPolynomial::monomial(exponent, Integer(sign));
  }
  SignedMonomial inverse() const { return {sign, -exponent}; }
  SignedMonomial operator*(const SignedMonomial& o) const {
    return {sign * o.sign, exponent + o.exponent};
  }
  SignedMonomial pow(int k) const {
    return {(k % 2 != 0) ? sign : 1, exponent * k};
  }
  std::string to_string() const { return detail::render_term(exponent, Integer(sign), true); }

  /// Returns the monomial if p is ±1 times one monomial.
  static std::optional<SignedMonomial> from_polynomial(const LaurentPolynomial& p) {
    if (!p.is_monomial()) return std::nullopt;
    const auto& [e, c] = *p.terms().begin();
    if (c != 1 && c != -1) return std::nullopt;
    return SignedMonomial{c > 0 ? 1 : -1, e};
  }
};

/// q^{n/2} − q^{−n/2} = s^n − s^{−n}.
inline LaurentPolynomial quantum_bracket(int n) {
  if (n < 1) throw std::invalid_argument("quantum_bracket requires n >= 1");
  return LaurentPolynomial::s(n) - LaurentPolynomial::s(-n);
}

/// z = q^{1/2} − q^{−1/2}.
inline LaurentPolynomial z_poly() { return quantum_bracket(1); }

/// [n]_q = 1 + q + ⋯ + q^{n−1}.
inline LaurentPolynomial q_integer(int n) {
  if (n < 0) throw std::invalid_argument("q_integer requires n >= 0");
  LaurentPolynomial r;
  for (int k = 0; k < n; ++k) r += LaurentPolynomial::q(k);
  return r;
}

}  // namespace skein
