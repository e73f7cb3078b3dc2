#pragma once

// Degree-by-degree solution of 𝐀Ψ = 0 on the positive solid-torus skein,
// the hook-content closed forms, and the determination of the unknown
// signed-monomial coefficients of 𝐀 from the first terms of Ψ.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partition.hpp"
#include "skein.hpp"

namespace skein {

enum class GeometryTag { c3, unknot, unknot_prime };

inline std::string to_string(GeometryTag t) {
  switch (t) {
    case GeometryTag::c3: return "c3";
    case GeometryTag::unknot: return "unknot";
    case GeometryTag::unknot_prime: return "unknot-prime";
  }
  return "?";
}

inline std::optional<GeometryTag> parse_geometry(std::string_view name) {
  if (name == "c3") return GeometryTag::c3;
  if (name == "unknot") return GeometryTag::unknot;
  if (name == "unknot-prime") return GeometryTag::unknot_prime;
  return std::nullopt;
}

struct Geometry {
  GeometryTag tag;
  OperatorExpression op;
};

/// The annihilating operators:
///   c3:           ◯ − P10 + a_Lγ P01
///   unknot:       ◯ − P10 + γ(a_L a P01 − a^{-1} P11)
///   unknot-prime: ◯ − P10 − γ(a_L a^{-1} P01 − a P11)
inline Geometry geometry(GeometryTag tag) {
  using L = LaurentPolynomial;
  using G = Generator;
  OperatorExpression op = OperatorExpression::generator(G::unknot) -
                          OperatorExpression::generator(G::p10);
  const L g = L::gamma();
  switch (tag) {
    case GeometryTag::c3:
      op += OperatorExpression::generator(G::p01, L::aL() * g);
      break;
    case GeometryTag::unknot:
      op += OperatorExpression::generator(G::p01, g * L::aL() * L::a());
      op += OperatorExpression::generator(G::p11, -(g * L::a(-1)));
      break;
    case GeometryTag::unknot_prime:
      op += OperatorExpression::generator(G::p01, -(g * L::aL() * L::a(-1)));
      op += OperatorExpression::generator(G::p11, g * L::a());
      break;
  }
  return {tag, std::move(op)};
}

/// Solves op Ψ = 0 with ψ_∅ = 1 through degree N.
///
/// The degree-preserving part D of op is diagonal on W_λ; the remaining terms
/// raise degree. In degree n the equation reads
///   D_μ ψ_μ + Σ_{k≥1} [R_k Ψ_{n−k}]_μ = 0,
/// so ψ_μ is determined once D_μ ≠ 0. Throws NoSolution if D_∅ ≠ 0 (only Ψ = 0
/// would solve) or D_μ = 0 for some |μ| ≥ 1 (no unique solution).
inline SkeinVector solve_annihilation(const OperatorExpression& op, int N,
                                      const SkeinConfig& cfg = {}) {
  if (N < 0) throw std::invalid_argument("truncation degree must be >= 0");
  OperatorExpression diagonal;
  std::map<int, OperatorExpression> raising;
  for (const auto& t : op.terms()) {
    OperatorExpression piece = OperatorExpression::from_term(t);
    const int k = OperatorExpression::raising_degree(t);
    if (k == 0) {
      diagonal += piece;
    } else {
      raising[k] += piece;
    }
  }

  auto eigenvalue = [&](const Partition& mu) {
    return apply_operator(diagonal, SkeinVector::basis(mu, mu.size()), cfg).coefficient(mu);
  };

  if (!eigenvalue(Partition()).is_zero()) {
    throw NoSolution("degree-zero part of the operator does not annihilate W_∅");
  }
  SkeinVector psi(N);
  psi.add(Partition(), 1);
  for (int n = 1; n <= N; ++n) {
    SkeinVector rhs(n);
    for (const auto& [k, r] : raising) {
      if (n - k < 0) continue;
      rhs += apply_operator(r, psi.degree_part(n - k).with_max_degree(n), cfg);
    }
    for (const Partition& mu : enumerate_partitions(n)) {
      RationalFunction d = eigenvalue(mu);
      if (d.is_zero()) {
        throw NoSolution("degree-preserving part vanishes on W_(" + mu.to_string() + ")");
      }
      RationalFunction c = rhs.coefficient(mu);
      if (!c.is_zero()) psi.add(mu, -c / d);
    }
  }
  return psi;
}

inline SkeinVector solve_recursion(const Geometry& geom, int N, const SkeinConfig& cfg = {}) {
  return solve_annihilation(geom.op, N, cfg);
}

inline SkeinVector solve_recursion(GeometryTag tag, int N, const SkeinConfig& cfg = {}) {
  return solve_recursion(geometry(tag), N, cfg);
}

namespace detail {

inline LaurentPolynomial hook_bracket_product(const Partition& lambda) {
  LaurentPolynomial d = 1;
  for (const Cell& c : cells(lambda)) d *= quantum_bracket(c.hook);
  return d;
}

}  // namespace detail

/// γ^{|λ|} Π_□ q^{−c(□)/2} / (q^{h(□)/2} − q^{−h(□)/2}).
inline RationalFunction closed_form_c3(const Partition& lambda) {
  int content_sum = 0;
  for (const Cell& c : cells(lambda)) content_sum += c.content;
  LaurentPolynomial num = LaurentPolynomial::monomial({-content_sum, 0, 0, lambda.size()});
  return RationalFunction(num, detail::hook_bracket_product(lambda));
}

enum class UnknotBranch { plain, prime };

/// γ^{|λ|} Π_□ (a q^{∓c/2} − a^{-1} q^{±c/2}) / (q^{h/2} − q^{−h/2}); the upper
/// signs are the plain branch, the lower ones the primed branch.
inline RationalFunction closed_form_unknot(const Partition& lambda, UnknotBranch branch) {
  using L = LaurentPolynomial;
  L num = L::gamma(lambda.size());
  for (const Cell& c : cells(lambda)) {
    const int e = branch == UnknotBranch::plain ? -c.content : c.content;
    num *= L::monomial({e, 1, 0, 0}) - L::monomial({-e, -1, 0, 0});
  }
  return RationalFunction(num, detail::hook_bracket_product(lambda));
}

/// ⟨W_λ(◯)⟩ = Π_□ (a q^{c/2} − a^{-1} q^{−c/2}) / (q^{h/2} − q^{−h/2}).
inline RationalFunction colored_unknot_invariant(const Partition& lambda) {
  using L = LaurentPolynomial;
  L num = 1;
  for (const Cell& c : cells(lambda)) {
    num *= L::monomial({c.content, 1, 0, 0}) - L::monomial({-c.content, -1, 0, 0});
  }
  return RationalFunction(num, detail::hook_bracket_product(lambda));
}

inline RationalFunction closed_form(GeometryTag tag, const Partition& lambda) {
  switch (tag) {
    case GeometryTag::c3: return closed_form_c3(lambda);
    case GeometryTag::unknot: return closed_form_unknot(lambda, UnknotBranch::plain);
    case GeometryTag::unknot_prime: return closed_form_unknot(lambda, UnknotBranch::prime);
  }
  throw std::logic_error("bad geometry");
}

/// Σ_{|λ|≤N} closed_form(λ) W_λ.
inline SkeinVector closed_form_vector(GeometryTag tag, int N) {
  SkeinVector v(N);
  for (const Partition& p : partitions_up_to(N)) v.add(p, closed_form(tag, p));
  return v;
}

/// True iff geom.op Ψ vanishes in every degree ≤ Ψ.max_degree().
inline bool verify_annihilation(const Geometry& geom, const SkeinVector& psi,
                                const SkeinConfig& cfg = {}) {
  return apply_operator(geom.op, psi, cfg).is_zero();
}

/// The reversal a ↦ a^{-1}, q^{1/2} ↦ −q^{1/2}.
inline Substitution orientation_reversal() {
  return {{Variable::a, SignedMonomial{1, {0, -1, 0, 0}}},
          {Variable::s, SignedMonomial{-1, {1, 0, 0, 0}}}};
}

/// Smallest λ (graded order) with |λ| ≤ N whose plain closed form is not
/// carried exactly onto the primed one by orientation_reversal().
inline std::optional<Partition> swap_symmetry_counterexample(int N) {
  const Substitution rev = orientation_reversal();
  for (const Partition& p : partitions_up_to(N)) {
    RationalFunction image = substitute(closed_form_unknot(p, UnknotBranch::plain), rev);
    if (!rf_equal(image, closed_form_unknot(p, UnknotBranch::prime))) return p;
  }
  return std::nullopt;
}

inline bool swap_symmetry_check(int N) { return !swap_symmetry_counterexample(N).has_value(); }

// ---------------------------------------------------------------------------
// Unknown signed-monomial coefficients

/// Exponent range for a, a_L and γ in candidate monomials; s never appears.
struct ExponentBounds {
  int lo = -2;
  int hi = 2;
};

struct Unknown {
  std::string name;
  Generator generator;
};

/// known + Σ_k x_k · generator_k, with each x_k an unknown signed monomial,
/// to be fixed by requiring the operator to annihilate `constraints` (the
/// low-degree truncation of Ψ).
struct CoefficientTemplate {
  OperatorExpression known;
  std::vector<Unknown> unknowns;
  SkeinVector constraints;
  ExponentBounds bounds{};
};

using Assignment = std::vector<SignedMonomial>;

/// Ψ = 1 + γ/(q^{1/2} − q^{−1/2}) W_□ against ◯ + γ_{1,0} P10 + γ_{0,1} P01.
inline CoefficientTemplate c3_coefficient_template() {
  SkeinVector psi(1);
  psi.add(Partition(), 1);
  psi.add(Partition{1}, RationalFunction(LaurentPolynomial::gamma(), z_poly()));
  return {OperatorExpression::generator(Generator::unknot),
          {{"γ_{1,0}", Generator::p10}, {"γ_{0,1}", Generator::p01}},
          std::move(psi)};
}

/// Ψ = 1 + γ(a − a^{-1})/(q^{1/2} − q^{−1/2}) W_□ against
/// ◯ + γ_{1,0} P10 + γ_{0,1} P01 + γ_{1,1} P11.
inline CoefficientTemplate unknot_coefficient_template() {
  using L = LaurentPolynomial;
  SkeinVector psi(1);
  psi.add(Partition(), 1);
  psi.add(Partition{1}, RationalFunction(L::gamma() * (L::a() - L::a(-1)), z_poly()));
  return {OperatorExpression::generator(Generator::unknot),
          {{"γ_{1,0}", Generator::p10}, {"γ_{0,1}", Generator::p01}, {"γ_{1,1}", Generator::p11}},
          std::move(psi)};
}

inline OperatorExpression instantiate(const CoefficientTemplate& tmpl, const Assignment& x) {
  OperatorExpression op = tmpl.known;
  for (std::size_t k = 0; k < tmpl.unknowns.size(); ++k) {
    op += OperatorExpression::generator(tmpl.unknowns[k].generator, x[k].to_polynomial());
  }
  return op;
}

namespace detail {

struct LinearEquation {
  RationalFunction constant;
  std::vector<RationalFunction> coeffs;
};

class MonomialSolver {
 public:
  MonomialSolver(std::vector<LinearEquation> eqs, std::size_t unknowns, ExponentBounds bounds)
      : eqs_(std::move(eqs)), assigned_(unknowns), bounds_(bounds) {
    for (int sign : {1, -1}) {
      for (int a = bounds.lo; a <= bounds.hi; ++a) {
        for (int aL = bounds.lo; aL <= bounds.hi; ++aL) {
          for (int g = bounds.lo; g <= bounds.hi; ++g) {
            candidates_.push_back({sign, {0, a, aL, g}});
          }
        }
      }
    }
  }

  std::vector<Assignment> run() {
    search();
    std::sort(results_.begin(), results_.end());
    return results_;
  }

 private:
  RationalFunction residual(const LinearEquation& eq) const {
    RationalFunction r = eq.constant;
    for (std::size_t k = 0; k < assigned_.size(); ++k) {
      if (assigned_[k] && !eq.coeffs[k].is_zero()) {
        r += eq.coeffs[k] * RationalFunction(assigned_[k]->to_polynomial());
      }
    }
    return r;
  }

  std::vector<std::size_t> open_unknowns(const LinearEquation& eq) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < assigned_.size(); ++k) {
      if (!assigned_[k] && !eq.coeffs[k].is_zero()) out.push_back(k);
    }
    return out;
  }

  bool in_bounds(const SignedMonomial& m) const {
    const Exponent& e = m.exponent;
    if (e.s != 0) return false;
    for (int v : {e.a, e.aL, e.g}) {
      if (v < bounds_.lo || v > bounds_.hi) return false;
    }
    return true;
  }

  void search() {
    const LinearEquation* pick = nullptr;
    std::vector<std::size_t> pick_open;
    for (const auto& eq : eqs_) {
      auto open = open_unknowns(eq);
      if (open.empty()) {
        if (!residual(eq).is_zero()) return;
        continue;
      }
      if (!pick || open.size() < pick_open.size()) {
        pick = &eq;
        pick_open = std::move(open);
      }
    }
    if (!pick) {
      record_with_free_unknowns();
      return;
    }
    const std::size_t k = pick_open.front();
    if (pick_open.size() == 1) {
      std::optional<SignedMonomial> m;
      try {
        RationalFunction x = -residual(*pick) / pick->coeffs[k];
        if (x.is_polynomial()) m = SignedMonomial::from_polynomial(x.numerator());
      } catch (const DenominatorNotSUnivariate&) {
        return;
      }
      if (!m || !in_bounds(*m)) return;
      assigned_[k] = *m;
      search();
      assigned_[k].reset();
      return;
    }
    for (const SignedMonomial& m : candidates_) {
      assigned_[k] = m;
      search();
    }
    assigned_[k].reset();
  }

  void record_with_free_unknowns() {
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < assigned_.size(); ++k) {
      if (!assigned_[k]) free.push_back(k);
    }
    if (free.size() > 1) {
      throw std::invalid_argument("coefficient template leaves several unknowns unconstrained");
    }
    if (free.empty()) {
      Assignment a;
      for (const auto& m : assigned_) a.push_back(*m);
      results_.push_back(std::move(a));
      return;
    }
    for (const SignedMonomial& m : candidates_) {
      assigned_[free.front()] = m;
      record_with_free_unknowns();
    }
    assigned_[free.front()].reset();
  }

  std::vector<LinearEquation> eqs_;
  std::vector<std::optional<SignedMonomial>> assigned_;
  ExponentBounds bounds_;
  std::vector<SignedMonomial> candidates_;
  std::vector<Assignment> results_;
};

}  // namespace detail

/// Every assignment of signed monomials (within the template's bounds) to the
/// unknowns for which the operator annihilates the constrained part of Ψ.
///
/// The coefficient of each W_μ, |μ| ≤ constraints.max_degree(), in 𝐀Ψ is an
/// affine expression in the unknowns. Equations are taken most-determined
/// first: a single open unknown is solved by exact division and accepted only
/// if the quotient is ± a monomial; with several open unknowns one of them is
/// enumerated over the bounded monomials. The search is exhaustive within the
/// bounds. Throws NoSolution when no assignment exists.
inline std::vector<Assignment> solve_monomial_coefficients(const CoefficientTemplate& tmpl,
                                                           const SkeinConfig& cfg = {}) {
  const SkeinVector& psi = tmpl.constraints;
  const SkeinVector known = apply_operator(tmpl.known, psi, cfg);
  std::vector<SkeinVector> parts;
  for (const Unknown& u : tmpl.unknowns) parts.push_back(apply_generator(u.generator, psi, cfg));

  std::vector<detail::LinearEquation> eqs;
  for (const Partition& mu : partitions_up_to(psi.max_degree())) {
    detail::LinearEquation eq{known.coefficient(mu), {}};
    bool any = !eq.constant.is_zero();
    for (const auto& v : parts) {
      eq.coeffs.push_back(v.coefficient(mu));
      any = any || !eq.coeffs.back().is_zero();
    }
    if (any) eqs.push_back(std::move(eq));
  }
  auto solutions = detail::MonomialSolver(std::move(eqs), tmpl.unknowns.size(), tmpl.bounds).run();
  if (solutions.empty()) throw NoSolution("no signed-monomial solution within exponent bounds");
  return solutions;
}

}  // namespace skein
