#pragma once

// Exhaustive identity checks up to a given degree.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "solver.hpp"

namespace skein {

enum class Suite { recursion, branching, commutator, symmetry, annihilation, parity, hookforms };

inline constexpr std::array<Suite, 7> kSuites{Suite::recursion, Suite::branching,
                                              Suite::commutator, Suite::symmetry,
                                              Suite::annihilation, Suite::parity,
                                              Suite::hookforms};

inline std::string to_string(Suite s) {
  switch (s) {
    case Suite::recursion: return "recursion";
    case Suite::branching: return "branching";
    case Suite::commutator: return "commutator";
    case Suite::symmetry: return "symmetry";
    case Suite::annihilation: return "annihilation";
    case Suite::parity: return "parity";
    case Suite::hookforms: return "hookforms";
  }
  return "?";
}

inline std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : kSuites) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

struct VerificationReport {
  Suite suite = Suite::parity;
  int max_degree = 0;
  long checked = 0;
  std::optional<std::string> failure;  // first counterexample

  bool passed() const { return !failure.has_value(); }

  std::string to_text() const {
    std::string out = "suite " + to_string(suite) + ", max degree " + std::to_string(max_degree) +
                      ": " + std::to_string(checked) + " identities checked, " +
                      (passed() ? "all pass" : "FAILED");
    if (failure) out += "\nfirst counterexample: " + *failure;
    return out;
  }
};

namespace detail {

class ReportBuilder {
 public:
  ReportBuilder(Suite s, int n) { report_.suite = s, report_.max_degree = n; }

  /// Records one identity. Returns false once a failure has been seen.
  bool check(bool ok, const std::string& what) {
    ++report_.checked;
    if (!ok && !report_.failure) report_.failure = what;
    return report_.passed();
  }
  VerificationReport done() { return std::move(report_); }

 private:
  VerificationReport report_;
};

inline std::string label(const Partition& p) { return "λ = (" + p.to_string() + ")"; }

}  // namespace detail

inline VerificationReport verify_suite(Suite suite, int N) {
  if (N < 0) throw std::invalid_argument("max degree must be >= 0");
  detail::ReportBuilder rb(suite, N);
  using detail::label;
  const GeometryTag tags[] = {GeometryTag::c3, GeometryTag::unknot, GeometryTag::unknot_prime};
  switch (suite) {
    case Suite::recursion:
      for (GeometryTag tag : tags) {
        const SkeinVector psi = solve_recursion(tag, N);
        for (const Partition& p : partitions_up_to(N)) {
          if (!rb.check(psi.coefficient(p) == closed_form(tag, p),
                        to_string(tag) + " solver vs closed form at " + label(p))) {
            return rb.done();
          }
        }
      }
      break;
    case Suite::branching:
      for (int n = 1; n <= N; ++n) {
        for (const Partition& mu : enumerate_partitions(n)) {
          if (!rb.check(verify_branching(mu), "branching rule at μ = (" + mu.to_string() + ")")) {
            return rb.done();
          }
        }
      }
      break;
    case Suite::commutator: {
      const OperatorExpression comm =
          commutator(OperatorExpression::generator(Generator::p10),
                     OperatorExpression::generator(Generator::p01));
      const RationalFunction z(z_poly());
      for (const Partition& p : partitions_up_to(N)) {
        const SkeinVector w = SkeinVector::basis(p, p.size() + 1);
        if (!rb.check(z * apply_P11(w) == apply_operator(comm, w),
                      "z·P11 vs [P10, P01] at " + label(p))) {
          return rb.done();
        }
      }
      break;
    }
    case Suite::symmetry: {
      const Substitution rev = orientation_reversal();
      for (const Partition& p : partitions_up_to(N)) {
        RationalFunction image = substitute(closed_form_unknot(p, UnknotBranch::plain), rev);
        if (!rb.check(image == closed_form_unknot(p, UnknotBranch::prime),
                      "a ↦ a^{-1}, q^{1/2} ↦ −q^{1/2} at " + label(p))) {
          return rb.done();
        }
      }
      break;
    }
    case Suite::annihilation:
      // one identity per W_λ coefficient of 𝐀Ψ, for the solver output and for
      // the closed-form vector independently
      for (GeometryTag tag : tags) {
        const Geometry geom = geometry(tag);
        for (const auto& [name, psi] : {std::pair{"solver", solve_recursion(geom, N)},
                                        std::pair{"closed-form", closed_form_vector(tag, N)}}) {
          const SkeinVector r = apply_operator(geom.op, psi);
          for (const Partition& p : partitions_up_to(N)) {
            if (!rb.check(r.coefficient(p).is_zero(), to_string(tag) + " operator on the " + name +
                                                          " vector is nonzero at " + label(p))) {
              return rb.done();
            }
          }
        }
      }
      break;
    case Suite::parity:
      for (const Partition& p : partitions_up_to(N)) {
        const long v = parity_sum(p);
        if (!rb.check(v % 2 == 0, "Σ(c + h + 1) = " + std::to_string(v) + " at " + label(p))) {
          return rb.done();
        }
      }
      break;
    case Suite::hookforms: {
      const Substitution invert{{Variable::s, SignedMonomial{1, {-1, 0, 0, 0}}}};
      for (const Partition& p : partitions_up_to(N)) {
        const LaurentPolynomial h = hook_polynomial(p);
        if (!rb.check(h == hook_polynomial_power_form(p), "hook product vs power form at " + label(p))) {
          return rb.done();
        }
        int content_sum = 0;
        for (const Cell& c : cells(p)) content_sum += c.content;
        const LaurentPolynomial balanced = h.shifted({-content_sum, 0, 0, 0});
        if (!rb.check(substitute(balanced, invert) == balanced,
                      "h_λ(q)·Π q^{-c/2} not symmetric under q → q^{-1} at " + label(p))) {
          return rb.done();
        }
      }
      break;
    }
  }
  return rb.done();
}

}  // namespace skein
