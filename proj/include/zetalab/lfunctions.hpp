#pragma once

// Quadratic Dirichlet L-functions by several routes: Hurwitz-zeta
// combinations, truncated Euler products with tail bounds, and the
// functional equation. Also closed forms at s = 1 and at odd s for D = -4,
// derivatives at s = 1, Euler-Kronecker constants, the Selberg-Chowla
// half-line formula, and the 2-D Madelung constant.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "zetalab/characters.hpp"
#include "zetalab/numerics.hpp"
#include "zetalab/special.hpp"
#include "zetalab/stieltjes.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab::lfunctions {

enum class Route { hurwitz, euler_product, functional_eq, closed_form };

inline const char* route_name(Route r) {
  switch (r) {
    case Route::hurwitz: return "hurwitz";
    case Route::euler_product: return "euler_product";
    case Route::functional_eq: return "functional_eq";
    case Route::closed_form: return "closed_form";
  }
  return "?";
}

struct LValue {
  std::int64_t d = 0;
  double s = 0.0;
  double value = 0.0;
  Route route = Route::hurwitz;
  double err_estimate = 0.0;
};

// L_D(s) = k^{-s} sum_m chi(m) zeta(s, m/k); at s = 1 the finite digamma
// sum (the gamma_0 route) is used instead. D = 1 is the Riemann zeta.
inline LValue l_value(std::int64_t d, double s) {
  LValue out;
  out.d = d;
  out.s = s;
  out.route = Route::hurwitz;
  if (d == 1) {
    if (s == 1.0) throw std::invalid_argument("l_value: zeta has a pole at s = 1");
    out.value = zeta::hurwitz_zeta(s, 1.0);
    out.err_estimate = 1e-13 * (std::abs(out.value) + 1.0);
    return out;
  }
  auto chi = characters::character_table(d);
  std::int64_t k = chi.modulus;
  if (s == 1.0) {
    out.value = characters::l_one(chi);
    out.route = Route::closed_form;
    out.err_estimate = 1e-13 * k;
    return out;
  }
  numerics::CompensatedAccumulator acc;
  for (std::int64_t m = 1; m < k; ++m) {
    int c = chi(m);
    if (c != 0)
      acc.add(c * zeta::hurwitz_zeta(s, static_cast<double>(m) / static_cast<double>(k)));
  }
  out.value = std::pow(static_cast<double>(k), -s) * acc.value();
  out.err_estimate = 1e-13 * k * std::pow(static_cast<double>(k), -s) *
                     std::pow(static_cast<double>(k), std::max(0.0, s));
  return out;
}

// Truncated Euler product prod_{p < limit} (1 - chi(p) p^{-s})^{-1} with a
// log-space tail majorant 2 limit^{1-s} / ((s-1) ln limit).
inline LValue l_value_euler(std::int64_t d, double s, std::uint64_t prime_limit) {
  if (!(s > 1.0)) throw std::invalid_argument("l_value_euler: need s > 1");
  if (d != 1 && !characters::is_fundamental(d))
    throw std::invalid_argument("l_value_euler: non-fundamental D");
  numerics::CompensatedAccumulator log_acc;
  numerics::sieve_primes(prime_limit, numerics::kDefaultSegmentSize,
                         [&](const numerics::SieveSegment& seg) {
                           for (std::uint64_t p : seg.primes) {
                             int c = d == 1 ? 1 : characters::kronecker_symbol(d, static_cast<std::int64_t>(p));
                             if (c == 0) continue;
                             double ps = std::pow(static_cast<double>(p), -s);
                             log_acc.add(-std::log1p(-c * ps));
                           }
                         });
  LValue out;
  out.d = d;
  out.s = s;
  out.route = Route::euler_product;
  out.value = std::exp(log_acc.value());
  double lt = static_cast<double>(prime_limit);
  double log_tail = 2.0 * std::pow(lt, 1.0 - s) / ((s - 1.0) * std::log(lt));
  out.err_estimate = out.value * std::expm1(log_tail);
  return out;
}

// Functional equation: given s, returns L_D(1 - s) computed from L_D(s):
//   L_{-k}(1-s) = 2 (2 pi)^{-s} k^{s-1/2} sin(pi s / 2) Gamma(s) L_{-k}(s)
//   L_{+k}(1-s) = 2 (2 pi)^{-s} k^{s-1/2} cos(pi s / 2) Gamma(s) L_{+k}(s)
inline LValue l_value_via_fe(std::int64_t d, double s) {
  if (d == 1 || !characters::is_fundamental(d))
    throw std::invalid_argument("l_value_via_fe: need a fundamental D != 1");
  bool gamma_pole = (s <= 0.0 && s == std::floor(s));
  if (gamma_pole) {
    double trig = d < 0 ? std::sin(std::numbers::pi * s / 2.0) : std::cos(std::numbers::pi * s / 2.0);
    if (trig != 0.0)
      throw std::invalid_argument("l_value_via_fe: Gamma pole at s = " + std::to_string(s) +
                                  " is not cancelled by the trigonometric factor");
    throw std::invalid_argument("l_value_via_fe: s at a Gamma pole; evaluate the limit via l_value instead");
  }
  double k = std::abs(static_cast<double>(d));
  double trig = d < 0 ? std::sin(std::numbers::pi * s / 2.0) : std::cos(std::numbers::pi * s / 2.0);
  double gam;
  if (s > 0.0) {
    gam = std::exp(special::log_gamma(s));
  } else {
    // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1 - s)), s < 0 non-integer
    gam = std::numbers::pi / (std::sin(std::numbers::pi * s) * std::exp(special::log_gamma(1.0 - s)));
  }
  LValue base = l_value(d, s);
  LValue out;
  out.d = d;
  out.s = 1.0 - s;
  out.route = Route::functional_eq;
  out.value = 2.0 * std::pow(2.0 * std::numbers::pi, -s) * std::pow(k, s - 0.5) * trig * gam * base.value;
  out.err_estimate = std::abs(out.value) * 1e-12 + std::abs(base.err_estimate) *
                     std::abs(out.value / (base.value == 0.0 ? 1.0 : base.value));
  return out;
}

// L_D'(1) = -ln|D| L_D(1) - (1/|D|) sum_m chi(m) gamma_1(m/|D|).
inline double l_prime_1(std::int64_t d) {
  if (d == 1 || !characters::is_fundamental(d))
    throw std::invalid_argument("l_prime_1: need a fundamental D != 1");
  auto chi = characters::character_table(d);
  std::int64_t k = chi.modulus;
  numerics::CompensatedAccumulator acc;
  for (std::int64_t m = 1; m < k; ++m) {
    int c = chi(m);
    if (c == 0) continue;
    auto g = stieltjes::stieltjes_gamma(1, static_cast<double>(m) / static_cast<double>(k));
    acc.add(-static_cast<double>(c) * g.value);
  }
  return -std::log(static_cast<double>(k)) * characters::l_one(chi) +
         acc.value() / static_cast<double>(k);
}

// Euler-Kronecker constant gamma_D = gamma + L'(1)/L(1).
inline double euler_kronecker(std::int64_t d) {
  auto chi = characters::character_table(d);
  return special::kEulerGamma + l_prime_1(d) / characters::l_one(chi);
}

// L_{-4}(2k+1) = (-1)^k E_{2k} (pi/2)^{2k+1} / (2 (2k)!).
inline double beta_odd(int k) {
  if (k < 0 || k > 10) throw std::invalid_argument("beta_odd: supported for 0 <= k <= 10");
  double e2k = int128_to_double(special::euler_number(2 * k));
  double fact = 1.0;
  for (int i = 2; i <= 2 * k; ++i) fact *= i;
  double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * e2k * std::pow(std::numbers::pi / 2.0, 2 * k + 1) / (2.0 * fact);
}

struct SelbergChowlaResult {
  double lhs = 0.0;      // zeta(1/2) L_{-p}(1/2)
  double rhs = 0.0;      // gamma + ln(sqrt(p)/(8 pi)) + Bessel series (sigma_1 kernel)
  int bessel_terms = 0;  // terms taken before |term| < 1e-16
};

// Half-line product against the Bessel series. The kernel follows the
// sigma_1 display; see the audit module for the divisor-count variant.
inline SelbergChowlaResult selberg_chowla_half(std::int64_t p, bool sigma1_kernel = true) {
  if (!(p > 0) || !numerics::is_prime_u64(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("selberg_chowla_half: p must be prime");
  // class-number-one primes p > 7; others are computed anyway (exploratory)
  auto lhsL = l_value(-p, 0.5);
  SelbergChowlaResult r;
  r.lhs = zeta::zeta_crit_strip(0.5) * lhsL.value;
  numerics::CompensatedAccumulator acc;
  acc.add(special::kEulerGamma);
  acc.add(std::log(std::sqrt(static_cast<double>(p)) / (8.0 * std::numbers::pi)));
  double sp = std::sqrt(static_cast<double>(p));
  for (int n = 1; n <= 64; ++n) {
    double kernel = sigma1_kernel ? numerics::divisor_sigma(1, n)
                                  : static_cast<double>(numerics::divisor_count(n));
    double term = 4.0 * (n % 2 == 0 ? 1.0 : -1.0) * kernel *
                  special::bessel_k0(sp * n * std::numbers::pi);
    acc.add(term);
    r.bessel_terms = n;
    if (std::abs(term) < 1e-16) break;
  }
  r.rhs = acc.value();
  return r;
}

// M_2 = 4 (sqrt(2) - 1) zeta(1/2) L_{-4}(1/2).
inline double madelung_m2() {
  return 4.0 * (std::sqrt(2.0) - 1.0) * zeta::zeta_crit_strip(0.5) * l_value(-4, 0.5).value;
}

}  // namespace zetalab::lfunctions
