#pragma once

// The positive solid-torus skein in the W_λ basis, truncated at a maximal
// degree, and the action of ◯, P_{1,0}, P_{0,1}, P_{1,1} on it:
//
//   ◯       W_λ = u W_λ,                 u = (a_L − a_L^{-1})/z
//   P_{1,0} W_λ = (u + a_L z c_λ(q)) W_λ
//   P_{0,1} W_λ = Σ_{μ=λ+□} W_μ
//   P_{1,1} W_λ = a_L Σ_{μ=λ+□} q^{c(□)} W_μ   (= z^{-1}[P_{1,0}, P_{0,1}] W_λ)

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"

namespace skein {

/// Standard framed-unknot value (a_L − a_L^{-1})/(q^{1/2} − q^{-1/2}).
inline RationalFunction standard_unknot() {
  return RationalFunction(LaurentPolynomial::aL(1) - LaurentPolynomial::aL(-1), z_poly());
}

/// Scalar by which ◯ acts. Solver results only depend on P_{1,0} − ◯, so any
/// value may be used here to check that nothing else leaks through.
struct SkeinConfig {
  RationalFunction unknot = standard_unknot();
};

class SkeinVector {
 public:
  using Coefficients = std::map<Partition, RationalFunction>;

  explicit SkeinVector(int max_degree = 0) : max_degree_(max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  }

  /// W_λ truncated at max_degree.
  static SkeinVector basis(const Partition& lambda, int max_degree) {
    SkeinVector v(max_degree);
    v.add(lambda, 1);
    return v;
  }

  int max_degree() const { return max_degree_; }
  const Coefficients& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  RationalFunction coefficient(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? RationalFunction() : it->second;
  }

  /// Adds c·W_λ. Throws if |λ| exceeds the truncation degree.
  void add(const Partition& lambda, const RationalFunction& c) {
    if (lambda.size() > max_degree_) {
      throw std::out_of_range("partition (" + lambda.to_string() + ") above max_degree " +
                              std::to_string(max_degree_));
    }
    add_unchecked(lambda, c);
  }

  /// Adds c·W_λ, silently dropping terms above the truncation degree.
  void add_truncated(const Partition& lambda, const RationalFunction& c) {
    if (lambda.size() <= max_degree_) add_unchecked(lambda, c);
  }

  /// The degree-n component.
  SkeinVector degree_part(int n) const {
    SkeinVector r(max_degree_);
    for (const auto& [p, c] : coeffs_) {
      if (p.size() == n) r.coeffs_.emplace(p, c);
    }
    return r;
  }

  SkeinVector with_max_degree(int max_degree) const {
    SkeinVector r(max_degree);
    for (const auto& [p, c] : coeffs_) r.add_truncated(p, c);
    return r;
  }

  SkeinVector& operator+=(const SkeinVector& o) {
    for (const auto& [p, c] : o.coeffs_) add_truncated(p, c);
    return *this;
  }
  SkeinVector& operator-=(const SkeinVector& o) {
    for (const auto& [p, c] : o.coeffs_) add_truncated(p, -c);
    return *this;
  }
  friend SkeinVector operator+(SkeinVector x, const SkeinVector& y) { return x += y; }
  friend SkeinVector operator-(SkeinVector x, const SkeinVector& y) { return x -= y; }

  friend SkeinVector operator*(const RationalFunction& k, const SkeinVector& v) {
    SkeinVector r(v.max_degree_);
    if (k.is_zero()) return r;
    for (const auto& [p, c] : v.coeffs_) r.coeffs_.emplace(p, k * c);
    return r;
  }

  /// Coefficientwise exact equality (truncation degrees must agree).
  friend bool operator==(const SkeinVector& x, const SkeinVector& y) {
    if (x.max_degree_ != y.max_degree_ || x.coeffs_.size() != y.coeffs_.size()) return false;
    auto it = y.coeffs_.begin();
    for (const auto& [p, c] : x.coeffs_) {
      if (it->first != p || !(it->second == c)) return false;
      ++it;
    }
    return true;
  }

 private:
  void add_unchecked(const Partition& lambda, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  int max_degree_;
  Coefficients coeffs_;
};

enum class Generator { identity, unknot, p10, p01, p11 };

inline std::string to_string(Generator g) {
  switch (g) {
    case Generator::identity: return "1";
    case Generator::unknot: return "◯";
    case Generator::p10: return "P10";
    case Generator::p01: return "P01";
    case Generator::p11: return "P11";
  }
  return "?";
}

/// Degree shift of a generator on the W_λ grading.
inline int raising_degree(Generator g) {
  return (g == Generator::p01 || g == Generator::p11) ? 1 : 0;
}

inline SkeinVector apply_unknot(const SkeinVector& v, const SkeinConfig& cfg = {}) {
  return cfg.unknot * v;
}

inline SkeinVector apply_P10(const SkeinVector& v, const SkeinConfig& cfg = {}) {
  SkeinVector r(v.max_degree());
  const LaurentPolynomial aLz = LaurentPolynomial::aL() * z_poly();
  for (const auto& [p, c] : v.coefficients()) {
    r.add(p, (cfg.unknot + RationalFunction(aLz * content_polynomial(p))) * c);
  }
  return r;
}

inline SkeinVector apply_P01(const SkeinVector& v) {
  SkeinVector r(v.max_degree());
  for (const auto& [p, c] : v.coefficients()) {
    if (p.size() + 1 > v.max_degree()) continue;
    for (const BoxMove& m : addable(p)) r.add(m.partition, c);
  }
  return r;
}

inline SkeinVector apply_P11(const SkeinVector& v) {
  SkeinVector r(v.max_degree());
  for (const auto& [p, c] : v.coefficients()) {
    if (p.size() + 1 > v.max_degree()) continue;
    for (const BoxMove& m : addable(p)) {
      r.add(m.partition, RationalFunction(LaurentPolynomial::aL() *
                                          LaurentPolynomial::q(m.box.content)) *
                             c);
    }
  }
  return r;
}

inline SkeinVector apply_generator(Generator g, const SkeinVector& v, const SkeinConfig& cfg = {}) {
  switch (g) {
    case Generator::identity: return v;
    case Generator::unknot: return apply_unknot(v, cfg);
    case Generator::p10: return apply_P10(v, cfg);
    case Generator::p01: return apply_P01(v);
    case Generator::p11: return apply_P11(v);
  }
  throw std::logic_error("bad generator");
}

/// Formal combination Σ c_i · (g_{i,1} ∘ ⋯ ∘ g_{i,k}); words act right to left.
class OperatorExpression {
 public:
  struct Term {
    RationalFunction coefficient;
    std::vector<Generator> word;  // empty word = identity
  };

  OperatorExpression() = default;

  static OperatorExpression generator(Generator g, const RationalFunction& c = 1) {
    OperatorExpression e;
    if (c.is_zero()) return e;
    std::vector<Generator> w;
    if (g != Generator::identity) w.push_back(g);
    e.terms_.push_back({c, std::move(w)});
    return e;
  }
  static OperatorExpression identity() { return generator(Generator::identity); }
  static OperatorExpression from_term(const Term& t) {
    OperatorExpression e;
    e.add_term(t);
    return e;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Number of raising generators in the word of each term.
  static int raising_degree(const Term& t) {
    int k = 0;
    for (Generator g : t.word) k += skein::raising_degree(g);
    return k;
  }

  OperatorExpression& operator+=(const OperatorExpression& o) {
    for (const Term& t : o.terms_) add_term(t);
    return *this;
  }
  OperatorExpression& operator-=(const OperatorExpression& o) {
    for (const Term& t : o.terms_) add_term({-t.coefficient, t.word});
    return *this;
  }
  friend OperatorExpression operator+(OperatorExpression x, const OperatorExpression& y) {
    return x += y;
  }
  friend OperatorExpression operator-(OperatorExpression x, const OperatorExpression& y) {
    return x -= y;
  }
  friend OperatorExpression operator*(const RationalFunction& k, const OperatorExpression& x) {
    OperatorExpression r;
    if (k.is_zero()) return r;
    for (const Term& t : x.terms_) r.terms_.push_back({k * t.coefficient, t.word});
    return r;
  }
  /// Composition: (x * y) v = x (y v).
  friend OperatorExpression operator*(const OperatorExpression& x, const OperatorExpression& y) {
    OperatorExpression r;
    for (const Term& tx : x.terms_) {
      for (const Term& ty : y.terms_) {
        std::vector<Generator> w = tx.word;
        w.insert(w.end(), ty.word.begin(), ty.word.end());
        r.add_term({tx.coefficient * ty.coefficient, std::move(w)});
      }
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
      std::string word;
      for (std::size_t i = 0; i < t.word.size(); ++i) {
        if (i) word += "∘";
        word += skein::to_string(t.word[i]);
      }
      const RationalFunction& c = t.coefficient;
      std::string cs;
      bool negative = false;
      auto mono = c.is_polynomial() ? SignedMonomial::from_polynomial(c.numerator())
                                    : std::nullopt;
      if (mono) {
        negative = mono->sign < 0;
        SignedMonomial m{1, mono->exponent};
        cs = m.exponent.is_zero() ? "" : m.to_string();
      } else {
        cs = "(" + c.to_string() + ")";
      }
      std::string body;
      if (word.empty()) {
        body = cs.empty() ? "1" : cs;
      } else {
        body = cs.empty() ? word : cs + "·" + word;
      }
      if (first) {
        out += (negative ? "−" : "") + body;
      } else {
        out += (negative ? " − " : " + ") + body;
      }
      first = false;
    }
    return out;
  }

 private:
  void add_term(const Term& t) {
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->word == t.word) {
        it->coefficient += t.coefficient;
        if (it->coefficient.is_zero()) terms_.erase(it);
        return;
      }
    }
    if (!t.coefficient.is_zero()) terms_.push_back(t);
  }

  std::vector<Term> terms_;
};

inline OperatorExpression commutator(const OperatorExpression& x, const OperatorExpression& y) {
  return x * y - y * x;
}

/// Linear extension of the generator actions. The result keeps v's truncation
/// degree: coefficients above it cannot be trusted and are discarded.
inline SkeinVector apply_operator(const OperatorExpression& op, const SkeinVector& v,
                                  const SkeinConfig& cfg = {}) {
  SkeinVector r(v.max_degree());
  for (const auto& t : op.terms()) {
    SkeinVector w = v;
    for (auto g = t.word.rbegin(); g != t.word.rend(); ++g) w = apply_generator(*g, w, cfg);
    r += t.coefficient * w;
  }
  return r;
}

}  // namespace skein
