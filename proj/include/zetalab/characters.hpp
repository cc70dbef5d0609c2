#pragma once

// Kronecker-Jacobi-Legendre symbol, real primitive character tables for
// fundamental discriminants, and class numbers of imaginary quadratic
// fields via the class number formula.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "zetalab/special.hpp"

namespace zetalab::characters {

// Squarefree by trial division; |n| is expected to stay small (<= 1e6).
inline bool is_squarefree(std::int64_t n) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

// Fundamental discriminant: 1 mod 4 and squarefree, or 4m with
// m = 2, 3 mod 4 squarefree. D = 1 counts (trivial character).
inline bool is_fundamental(std::int64_t d) {
  if (d == 0) return false;
  std::int64_t r = ((d % 4) + 4) % 4;
  if (r == 1) return is_squarefree(d);
  if (r != 0) return false;
  std::int64_t m = d / 4;
  std::int64_t rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && is_squarefree(m);
}

namespace detail {

// Jacobi-style core (a/n) for odd n > 0, completely multiplicative
// extension handled by the caller.
inline int jacobi_odd(std::int64_t a, std::int64_t n) {
  a %= n;
  if (a < 0) a += n;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

}  // namespace detail

// Kronecker symbol (D/n) for a fundamental discriminant D (or +-1) and n >= 1.
inline int kronecker_symbol(std::int64_t d, std::int64_t n) {
  if (n == 0) throw std::invalid_argument("kronecker_symbol: n = 0 not accepted");
  if (n < 0) throw std::invalid_argument("kronecker_symbol: need n >= 1");
  if (d != 1 && d != -1 && !is_fundamental(d))
    throw std::invalid_argument("kronecker_symbol: D must be a fundamental discriminant");
  if (d == 1) return 1;

  int result = 1;
  // factor powers of two out of n; (D/2) = 0 if D even, else by D mod 8
  while (n % 2 == 0) {
    if (d % 2 == 0) return 0;
    std::int64_t r = ((d % 8) + 8) % 8;
    result *= (r == 1 || r == 7) ? 1 : -1;
    n /= 2;
  }
  if (n == 1) return result;
  // (D/n) for odd n via Jacobi with the sign convention of the Kronecker
  // extension: (D/n) = (-1/n)^{sign} (|D|/n) handled through reciprocity.
  std::int64_t a = d % n;
  if (a < 0) a += n;
  int core = detail::jacobi_odd(a, n);
  return result * core;
}

struct CharacterTable {
  std::int64_t d = 0;           // fundamental discriminant
  std::int64_t modulus = 0;     // |d|
  std::vector<int> values;      // chi(1) .. chi(modulus); values[m-1]
  bool odd_parity = false;      // chi(-1) == -1, iff d < 0

  int operator()(std::int64_t n) const {
    if (modulus == 1) return 1;
    std::int64_t r = n % modulus;
    if (r < 0) r += modulus;
    if (r == 0) return 0;
    return values[static_cast<std::size_t>(r - 1)];
  }
};

// Table construction verifies the zero-sum, sampled complete
// multiplicativity, and parity invariants; a violation means a symbol bug.
inline CharacterTable character_table(std::int64_t d) {
  if (!is_fundamental(d)) throw std::invalid_argument("character_table: non-fundamental D");
  std::int64_t k = std::abs(d);
  if (k > 1000000) throw std::invalid_argument("character_table: |D| too large");
  CharacterTable t;
  t.d = d;
  t.modulus = k;
  t.values.resize(static_cast<std::size_t>(k));
  long sum = 0;
  for (std::int64_t m = 1; m <= k; ++m) {
    int v = kronecker_symbol(d, m);
    t.values[static_cast<std::size_t>(m - 1)] = v;
    sum += v;
  }
  if (d != 1 && sum != 0) throw std::logic_error("character_table: zero-sum invariant failed");
  for (std::int64_t m = 1; m <= std::min<std::int64_t>(k, 16); ++m)
    for (std::int64_t n = m; n <= std::min<std::int64_t>(k, 16); ++n)
      if (t(m * n) != t(m) * t(n))
        throw std::logic_error("character_table: multiplicativity invariant failed");
  t.odd_parity = (d < 0);
  if (d != 1 && t(k - 1) != (d > 0 ? 1 : -1))
    throw std::logic_error("character_table: parity invariant failed");
  return t;
}

// L_D(1) from the finite digamma sum (the gamma_0 route):
//   L(1) = -(1/k) sum_m chi(m) psi(m/k).
inline double l_one(const CharacterTable& chi) {
  if (chi.d == 1) throw std::invalid_argument("l_one: pole of zeta at s = 1");
  numerics::CompensatedAccumulator acc;
  for (std::int64_t m = 1; m < chi.modulus; ++m) {
    int c = chi(m);
    if (c != 0)
      acc.add(-static_cast<double>(c) *
              special::digamma(static_cast<double>(m) / static_cast<double>(chi.modulus)));
  }
  return acc.value() / static_cast<double>(chi.modulus);
}

struct QuadraticFieldData {
  std::int64_t d = 0;
  std::int64_t h = 0;          // class number
  int unit_count = 2;          // w: 6 at D=-3, 4 at D=-4, else 2
  double l_at_1 = 0.0;
  double rounding_distance = 0.0;  // |h_real - round(h_real)|
};

// Class number of Q(sqrt(D)) for fundamental D < 0 via
//   h = w sqrt(|D|) L_D(1) / (2 pi).
inline QuadraticFieldData class_number(std::int64_t d) {
  if (!(d < 0)) throw std::invalid_argument("class_number: implemented for D < 0");
  if (d <= -10000) throw std::invalid_argument("class_number: |D| out of supported range");
  if (!is_fundamental(d)) throw std::invalid_argument("class_number: non-fundamental D");
  QuadraticFieldData q;
  q.d = d;
  q.unit_count = (d == -3) ? 6 : (d == -4) ? 4 : 2;
  auto chi = character_table(d);
  q.l_at_1 = l_one(chi);
  double h_real = q.unit_count * std::sqrt(static_cast<double>(-d)) * q.l_at_1 /
                  (2.0 * std::numbers::pi);
  double h_round = std::round(h_real);
  q.rounding_distance = std::abs(h_real - h_round);
  if (q.rounding_distance > 0.01)
    throw std::runtime_error("class_number: formula inversion is not near an integer (L(1) accuracy bug?)");
  q.h = static_cast<std::int64_t>(h_round);
  return q;
}

}  // namespace zetalab::characters
