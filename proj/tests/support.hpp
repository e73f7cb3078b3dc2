#pragma once

// Shared helpers for the unit suites: short constructors and seeded random
// instances.

#include <random>

#include <skeinsolve/skeinsolve.hpp>

namespace skein::test {

using L = LaurentPolynomial;
using RF = RationalFunction;

inline L s(int k = 1) { return L::s(k); }
inline L q(int k = 1) { return L::q(k); }
inline L z() { return z_poly(); }

/// Random polynomial with up to `terms` terms, small exponents and
/// coefficients in [-5, 5].
inline L random_polynomial(std::mt19937& rng, int terms = 4, int spread = 2) {
  std::uniform_int_distribution<int> e(-spread, spread);
  std::uniform_int_distribution<int> c(-5, 5);
  L f;
  for (int i = 0; i < terms; ++i) f += L::monomial({e(rng), e(rng), e(rng), e(rng)}, c(rng));
  return f;
}

inline L random_s_polynomial(std::mt19937& rng, int terms = 3, int spread = 3) {
  std::uniform_int_distribution<int> e(-spread, spread);
  std::uniform_int_distribution<int> c(-4, 4);
  L f;
  for (int i = 0; i < terms; ++i) f += L::monomial({e(rng), 0, 0, 0}, c(rng));
  return f;
}

/// Random rational function with an s-only denominator built from quantum
/// brackets and [n]_q factors, so cancellation actually happens.
inline RF random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 5);
  L den = 1;
  const int factors = pick(rng) % 3;
  for (int i = 0; i < factors; ++i) {
    const int n = 1 + pick(rng) % 3;
    den *= (pick(rng) % 2) ? quantum_bracket(n) : q_integer(n);
  }
  L num = random_polynomial(rng);
  if (pick(rng) % 2 && !den.is_one()) num *= quantum_bracket(1);
  return RF(num, den);
}

}  // namespace skein::test
