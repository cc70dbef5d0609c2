#pragma once

// Hurwitz zeta and its s-derivative by Euler-Maclaurin summation with a
// self-validating remainder, the Riemann zeta on (0,1) via the de Bruijn
// integral representation, and lattice (Epstein) sums of positive-definite
// binary quadratic forms.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "zetalab/numerics.hpp"
#include "zetalab/special.hpp"

namespace zetalab::zeta {

namespace detail {

inline constexpr int kEmOrder = 8;  // J: Bernoulli terms B_2 .. B_{2J}

struct EmParams {
  std::int64_t n = 0;  // summation cutoff (terms 0 .. n-1, boundary at n)
};

// Pochhammer (s)_m = s (s+1) ... (s+m-1) and its s-derivative.
inline std::pair<double, double> pochhammer_with_ds(double s, int m) {
  double value = 1.0, deriv = 0.0;
  for (int i = 0; i < m; ++i) {
    deriv = deriv * (s + i) + value;
    value *= (s + i);
  }
  return {value, deriv};
}

// Magnitude of the first omitted Euler-Maclaurin term; used as the
// remainder bound (valid for real s with s + 2J + 1 > 0).
inline double em_remainder_bound(double s, double a, std::int64_t n) {
  double base = n + a;
  double poch = std::abs(pochhammer_with_ds(s, 2 * kEmOrder + 1).first);
  double b = std::abs(special::bernoulli_d(2 * kEmOrder + 2));
  double fact = 1.0;
  for (int i = 2; i <= 2 * kEmOrder + 2; ++i) fact *= i;
  return b / fact * poch * std::pow(base, -(s + 2 * kEmOrder + 1));
}

inline EmParams choose_em_params(double s, double a) {
  std::int64_t n = static_cast<std::int64_t>(std::ceil(std::abs(s))) + 10;
  // For s > 0 start inside the asymptotic zone. For s <= 0 the terms grow
  // with n and a large cutoff only feeds the boundary-term cancellation, so
  // the remainder-driven doubling below is left to do the work alone.
  if (s > 0.0)
    n = std::max(n, static_cast<std::int64_t>(std::ceil(10.0 / a)));
  for (int rounds = 0; rounds < 24; ++rounds) {
    double bound = em_remainder_bound(s, a, n);
    double scale = std::pow(a, -std::max(s, 1.0)) + 1.0;  // crude size of the result
    if (bound <= 1e-14 * scale || bound <= 1e-18) return {n};
    n *= 2;
    if (n > (std::int64_t{1} << 26))
      throw std::runtime_error("hurwitz_zeta: Euler-Maclaurin cutoff exploded");
  }
  return {n};
}

}  // namespace detail

// Hurwitz zeta zeta(s, a) for real s != 1 (negative s included via the
// same Euler-Maclaurin formula, which continues analytically), a > 0.
inline double hurwitz_zeta(double s, double a) {
  if (s == 1.0) throw std::invalid_argument("hurwitz_zeta: pole at s = 1");
  if (!(a > 0.0)) throw std::invalid_argument("hurwitz_zeta: need a > 0");
  auto [n] = detail::choose_em_params(s, a);
  numerics::CompensatedAccumulator acc;
  for (std::int64_t k = 0; k < n; ++k) acc.add(std::pow(k + a, -s));
  double base = n + a;
  acc.add(std::pow(base, 1.0 - s) / (s - 1.0));
  acc.add(0.5 * std::pow(base, -s));
  double fact = 1.0;
  for (int j = 1; j <= detail::kEmOrder; ++j) {
    fact *= (2.0 * j - 1.0) * (2.0 * j);
    double poch = detail::pochhammer_with_ds(s, 2 * j - 1).first;
    acc.add(special::bernoulli_d(2 * j) / fact * poch * std::pow(base, -s - 2 * j + 1));
  }
  return acc.value();
}

// d/ds zeta(s, a) + 1/(s-1)^2: the regular part of the derivative near the
// pole, assembled so the pole difference is taken analytically (expm1).
// Works for any real s != 1 as well, where it simply equals
// zeta'(s,a) + 1/(s-1)^2.
inline double hurwitz_zeta_ds_regularized(double s, double a) {
  if (s == 1.0) throw std::invalid_argument("hurwitz_zeta_ds: pole at s = 1");
  if (!(a > 0.0)) throw std::invalid_argument("hurwitz_zeta_ds: need a > 0");
  auto [n] = detail::choose_em_params(s, a);
  numerics::CompensatedAccumulator acc;
  for (std::int64_t k = 0; k < n; ++k) acc.add(-std::log(k + a) * std::pow(k + a, -s));
  double base = n + a;
  double lb = std::log(base);
  // d/ds [ base^{1-s}/(s-1) ] + 1/(s-1)^2
  //   = -lb base^{1-s}/(s-1) + (1 - base^{1-s})/(s-1)^2
  double w = (1.0 - s) * lb;
  acc.add(-lb * std::exp(w) / (s - 1.0));
  acc.add(-std::expm1(w) / ((s - 1.0) * (s - 1.0)));
  acc.add(-0.5 * lb * std::pow(base, -s));
  double fact = 1.0;
  for (int j = 1; j <= detail::kEmOrder; ++j) {
    fact *= (2.0 * j - 1.0) * (2.0 * j);
    auto [poch, dpoch] = detail::pochhammer_with_ds(s, 2 * j - 1);
    acc.add(special::bernoulli_d(2 * j) / fact * (dpoch - poch * lb) * std::pow(base, -s - 2 * j + 1));
  }
  return acc.value();
}

inline double hurwitz_zeta_ds(double s, double a) {
  return hurwitz_zeta_ds_regularized(s, a) - 1.0 / ((s - 1.0) * (s - 1.0));
}

// ---------------------------------------------------------------------------
// Riemann zeta inside the critical strip, 0 < s < 1, via
//   zeta(s) = 1/(s-1) + (sin(pi s)/pi) Int_0^inf [ln(1+t) - psi(1+t)] t^{-s} dt.
// The bracket is evaluated through log_minus_digamma, which stays accurate
// for huge t where the naive difference would cancel.

inline double zeta_crit_strip(double s) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("zeta_crit_strip: need 0 < s < 1");
  auto integrand = [s](double t) {
    return special::log_minus_digamma(1.0 + t) * std::pow(t, -s);
  };
  auto q = numerics::integrate_to_inf(integrand, 0.0, 1e-11);
  return 1.0 / (s - 1.0) + std::sin(std::numbers::pi * s) / std::numbers::pi * q.value;
}

// The companion ln-t weighted integral (1/pi) Int [ln(1+t)-psi(1+t)] ln t t^{-1/2} dt,
// which equals -4 - zeta'(1/2).
inline double debruijn_log_weighted_half() {
  auto integrand = [](double t) {
    return special::log_minus_digamma(1.0 + t) * std::log(t) / std::sqrt(t);
  };
  auto q = numerics::integrate_to_inf(integrand, 0.0, 1e-11);
  return q.value / std::numbers::pi;
}

// ---------------------------------------------------------------------------
// Epstein lattice sums.

struct QuadForm {
  std::int64_t a = 0, b = 0, c = 0;  // a m^2 + b m n + c n^2
  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  bool positive_definite() const { return a > 0 && discriminant() < 0; }
  // Smallest eigenvalue of [[a, b/2], [b/2, c]].
  double lambda_min() const {
    double tr = static_cast<double>(a) + c;
    double det = static_cast<double>(a) * c - 0.25 * static_cast<double>(b) * b;
    return 0.5 * (tr - std::sqrt(tr * tr - 4.0 * det));
  }
};

struct EpsteinResult {
  double value = 0.0;       // sum over 0 < max(|m|,|n|) <= radius of Q(m,n)^-s
  double tail_bound = 0.0;  // annulus-integral bound on the omitted terms
};

// Direct lattice sum of Q(m,n)^{-s} over the square 0 < max(|m|,|n|) <= radius.
// Rows are folded (m,n) with (-m,-n), which preserves the exact value and
// halves the work; accumulation is compensated in fixed row order.
inline EpsteinResult epstein_partial_zeta(const QuadForm& form, double s, std::int64_t radius) {
  if (!form.positive_definite())
    throw std::invalid_argument("epstein_partial_zeta: form must be positive definite");
  if (!(s > 1.0)) throw std::invalid_argument("epstein_partial_zeta: need s > 1");
  if (radius < 1) throw std::invalid_argument("epstein_partial_zeta: radius must be >= 1");
  const bool s_is_2 = (s == 2.0);
  numerics::CompensatedAccumulator acc;
  // Half lattice: n > 0 any m; n = 0, m > 0. Each point stands for itself
  // and its negation.
  auto q_of = [&form](std::int64_t m, std::int64_t n) {
    return static_cast<double>(form.a * m * m + form.b * m * n + form.c * n * n);
  };
  for (std::int64_t m = 1; m <= radius; ++m) {
    double q = q_of(m, 0);
    acc.add(2.0 * (s_is_2 ? 1.0 / (q * q) : std::pow(q, -s)));
  }
  for (std::int64_t n = 1; n <= radius; ++n) {
    for (std::int64_t m = -radius; m <= radius; ++m) {
      double q = q_of(m, n);
      acc.add(2.0 * (s_is_2 ? 1.0 / (q * q) : std::pow(q, -s)));
    }
  }
  EpsteinResult r;
  r.value = acc.value();
  double lam = form.lambda_min();
  double rr = static_cast<double>(radius) - 1.0;
  if (rr < 1.0) rr = 1.0;
  r.tail_bound = std::numbers::pi * std::pow(lam, -s) * std::pow(rr, 2.0 - 2.0 * s) / (s - 1.0);
  return r;
}

}  // namespace zetalab::zeta
