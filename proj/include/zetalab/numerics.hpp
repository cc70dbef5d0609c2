#pragma once

// Foundational numerics: compensated summation, double-exponential
// quadrature on finite and semi-infinite domains, arithmetic functions,
// a segmented odds-only prime sieve, and a Pell-equation solver for
// fundamental units of real quadratic orders.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetalab/common.hpp"

namespace zetalab::numerics {

// ---------------------------------------------------------------------------
// Compensated summation (Neumaier variant; survives cancellation like
// 1 + 1e-16 - 1 and stays O(eps) for very long sums).

class CompensatedAccumulator {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> terms) {
  CompensatedAccumulator acc;
  for (double t : terms) acc.add(t);
  return acc.value();
}

// Cohen-Rodriguez Villegas-Zagier acceleration for alternating series
// sum_{k>=0} (-1)^k a_k with a_k totally monotone. Error ~ (3+sqrt(8))^-n.
inline double accelerated_alternating_sum(const std::function<double(int)>& a, int n = 40) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0, c = -d;
  CompensatedAccumulator s;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s.add(c * a(k));
    b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
  }
  return s.value() / d;
}

// ---------------------------------------------------------------------------
// Double-exponential quadrature.

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute
  std::int64_t evaluations = 0;
};

class quadrature_error : public std::runtime_error {
 public:
  quadrature_error(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_estimate(best) {}
  QuadratureResult best_estimate;
};

namespace detail {

inline void check_sample(double fx, double x) {
  if (!std::isfinite(fx)) {
    std::ostringstream os;
    os << "integrand returned non-finite value at abscissa " << x;
    throw std::domain_error(os.str());
  }
}

// Shared level-doubling driver. `sample(t, acc)` adds the weighted
// integrand value at trapezoid node t into acc and returns the
// evaluation count it consumed.
template <class Sample>
QuadratureResult de_levels(Sample&& sample, double t_max, double target_abs_err) {
  constexpr int kMaxLevel = 12;
  QuadratureResult res;
  double h = 1.0;
  CompensatedAccumulator acc;
  {  // level 0: integer nodes
    sample(0.0, acc, res.evaluations);
    for (int j = 1; j * h <= t_max; ++j) {
      sample(j * h, acc, res.evaluations);
      sample(-j * h, acc, res.evaluations);
    }
  }
  double prev = acc.value() * h;
  double prev_diff = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    for (int j = 1; j * h <= t_max; j += 2) {  // odd multiples only
      sample(j * h, acc, res.evaluations);
      sample(-j * h, acc, res.evaluations);
    }
    double cur = acc.value() * h;
    double diff = std::abs(cur - prev);
    double tol = std::max(target_abs_err, 16.0 * std::numeric_limits<double>::epsilon() * std::abs(cur));
    if (diff <= tol && prev_diff <= 16.0 * tol) {
      res.value = cur;
      res.error_estimate = std::max(diff, std::abs(cur) * std::numeric_limits<double>::epsilon());
      return res;
    }
    prev = cur;
    prev_diff = diff;
  }
  res.value = prev;
  res.error_estimate = prev_diff;
  std::ostringstream os;
  os << "quadrature did not reach target " << target_abs_err << " after " << kMaxLevel
     << " levels (last inter-level difference " << prev_diff << ")";
  throw quadrature_error(os.str(), res);
}

}  // namespace detail

// tanh-sinh rule on a finite interval [a, b]. Integrable endpoint
// singularities of algebraic or logarithmic type are fine; nodes are
// generated as exact offsets from the nearer endpoint.
template <class F>
QuadratureResult integrate_finite(F&& f, double a, double b, double target_abs_err = 1e-12) {
  if (!(a < b)) throw std::invalid_argument("integrate_finite: need a < b");
  const double half = 0.5 * (b - a);
  const double t_max = 6.115;  // weights underflow past this point
  auto sample = [&](double t, CompensatedAccumulator& acc, std::int64_t& evals) {
    double u = std::numbers::pi / 2.0 * std::sinh(t);
    double wp = 2.0 / (1.0 + std::exp(-2.0 * u));  // 1 + tanh(u)
    double wm = 2.0 - wp;                          // 1 - tanh(u)
    double weight = half * (std::numbers::pi / 2.0) * std::cosh(t) * wp * wm;
    if (weight == 0.0) return;
    double x = (t <= 0.0) ? a + half * wp : b - half * wm;
    if (x <= a) x = a + half * wp;  // guard against rounding onto the endpoint
    if (x >= b) x = b - half * wm;
    double fx = f(x);
    detail::check_sample(fx, x);
    ++evals;
    acc.add(weight * fx);
  };
  return detail::de_levels(sample, t_max, target_abs_err);
}

// exp-sinh rule on [a, +inf).
template <class F>
QuadratureResult integrate_to_inf(F&& f, double a, double target_abs_err = 1e-12) {
  const double t_max = 6.7;  // exp argument stays below ~703
  auto sample = [&](double t, CompensatedAccumulator& acc, std::int64_t& evals) {
    double u = std::numbers::pi / 2.0 * std::sinh(t);
    if (u > 703.0) return;  // abscissa beyond double range; integrand must have decayed
    double ex = std::exp(u);
    double weight = (std::numbers::pi / 2.0) * std::cosh(t) * ex;
    double x = a + ex;
    double fx = f(x);
    detail::check_sample(fx, x);
    ++evals;
    double term = weight * fx;
    if (std::isfinite(term)) acc.add(term);
  };
  return detail::de_levels(sample, t_max, target_abs_err);
}

// ---------------------------------------------------------------------------
// Arithmetic functions.

// sigma_alpha(n) = sum over divisors d|n of d^alpha; alpha may be negative.
inline double divisor_sigma(int alpha, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisor_sigma: n must be >= 1");
  double sum = 0.0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    std::uint64_t e = n / d;
    sum += std::pow(static_cast<double>(d), alpha);
    if (e != d) sum += std::pow(static_cast<double>(e), alpha);
  }
  return sum;
}

// Divisor count d(n) = sigma_0(n).
inline std::uint64_t divisor_count(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisor_count: n must be >= 1");
  std::uint64_t cnt = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    cnt += (d == n / d) ? 1 : 2;
  }
  return cnt;
}

// ---------------------------------------------------------------------------
// Segmented odds-only sieve of Eratosthenes.

struct SieveSegment {
  std::uint64_t lo = 0;  // inclusive
  std::uint64_t hi = 0;  // exclusive
  std::vector<std::uint64_t> primes;
};

inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 20;

// Streams the primes below `limit` in ascending segments [lo, hi).
// The concatenated prime list is independent of segment_size.
inline void sieve_primes(std::uint64_t limit, std::uint64_t segment_size,
                         const std::function<void(const SieveSegment&)>& consume) {
  if (limit < 2) throw std::invalid_argument("sieve_primes: limit must be >= 2");
  if (segment_size < 16) throw std::invalid_argument("sieve_primes: segment_size too small");
  if (limit > (std::uint64_t{1} << 40))
    throw std::invalid_argument("sieve_primes: limit too large for this sieve");

  // Base primes up to sqrt(limit) by a plain sieve.
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 2;
  std::vector<bool> small(root + 1, true);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    if (i * i <= root)
      for (std::uint64_t j = i * i; j <= root; j += i) small[j] = false;
    if (i > 2) base.push_back(i);
  }

  std::vector<std::uint8_t> composite;
  for (std::uint64_t lo = 2; lo < limit; lo += segment_size) {
    std::uint64_t hi = std::min(lo + segment_size, limit);
    SieveSegment seg;
    seg.lo = lo;
    seg.hi = hi;
    if (lo <= 2 && 2 < hi) seg.primes.push_back(2);

    // Odd numbers in [lo, hi).
    std::uint64_t first_odd = lo | 1;
    if (first_odd < 3) first_odd = 3;
    if (first_odd < hi) {
      std::uint64_t count = (hi - first_odd + 1) / 2;
      composite.assign(count, 0);
      for (std::uint64_t p : base) {
        if (p * p >= hi) break;
        std::uint64_t start = std::max(p * p, ((first_odd + p - 1) / p) * p);
        if (start % 2 == 0) start += p;
        for (std::uint64_t m = start; m < hi; m += 2 * p) composite[(m - first_odd) / 2] = 1;
      }
      for (std::uint64_t i = 0; i < count; ++i)
        if (!composite[i]) seg.primes.push_back(first_odd + 2 * i);
    }
    consume(seg);
  }
}

inline std::vector<std::uint64_t> primes_below(std::uint64_t limit,
                                               std::uint64_t segment_size = kDefaultSegmentSize) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  sieve_primes(limit, segment_size, [&](const SieveSegment& seg) {
    out.insert(out.end(), seg.primes.begin(), seg.primes.end());
  });
  return out;
}

// Deterministic trial-division primality check, used as the sieve's
// spot-check in tests and construction-time validation.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Fundamental units: smallest unit > 1 of the maximal order of Q(sqrt(D)),
// normalized as (x + y sqrt(D))/2 with x^2 - D y^2 = +-4.

struct PellUnit {
  std::int64_t D = 0;
  int128 x = 0;
  int128 y = 0;
  double unit_value = 0.0;  // (x + y sqrt(D)) / 2
  int norm = 0;             // (x^2 - D y^2) / 4, either +1 or -1
};

namespace detail {

inline bool is_perfect_square_i64(std::int64_t n) {
  if (n < 0) return false;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  for (std::int64_t c = std::max<std::int64_t>(0, r - 1); c <= r + 1; ++c)
    if (c * c == n) return true;
  return false;
}

}  // namespace detail

// Continued-fraction state for (P + sqrt(D))/Q and the convergent
// recurrence in checked 128-bit arithmetic.
struct PellConvergent {
  int128 p, q;  // convergent p/q
};

// Fundamental unit via the continued fraction of the reduced quadratic
// irrational attached to the order of discriminant D:
//   D odd:  (b + sqrt(D))/2 with b the largest odd integer < sqrt(D)
//   D even: sqrt(D/4), shifted into its periodic part
// The period-end convergents give the unit exactly; all arithmetic is
// integer and overflow-checked.
inline PellUnit pell_fundamental(std::int64_t D) {
  if (D <= 1) throw std::invalid_argument("pell_fundamental: need D > 1");
  if (detail::is_perfect_square_i64(D)) throw std::invalid_argument("pell_fundamental: D must be non-square");
  std::int64_t mod4 = D % 4;
  if (mod4 != 0 && mod4 != 1) throw std::invalid_argument("pell_fundamental: D must be 0 or 1 mod 4");

  auto isqrt = [](std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while ((r + 1) * (r + 1) <= n) ++r;
    while (r * r > n) --r;
    return r;
  };

  int128 x = 0, y = 0;
  if (mod4 == 1) {
    // Purely periodic CF of (b + sqrt(D))/2, conjugate in (-1, 0).
    std::int64_t s = isqrt(D);
    std::int64_t b = (s % 2 == 1) ? s : s - 1;
    std::int64_t P0 = b, Q0 = 2;
    std::int64_t P = P0, Q = Q0;
    int128 pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;  // p_{-1}=1, p_{-2}=0 etc.
    do {
      std::int64_t aq = (P + s) / Q;
      int128 p = checked_add(checked_mul(aq, pm1), pm2);
      int128 q = checked_add(checked_mul(aq, qm1), qm2);
      pm2 = pm1; pm1 = p;
      qm2 = qm1; qm1 = q;
      P = aq * Q - P;
      Q = (D - P * P) / Q;
    } while (!(P == P0 && Q == Q0));
    // unit = q_{l-1} * (b + sqrt(D))/2 + q_{l-2}
    x = checked_add(checked_mul(qm1, b), checked_mul(int128{2}, qm2));
    y = qm1;
  } else {
    // CF of sqrt(m), m = D/4; period ends when Q returns to 1.
    std::int64_t m = D / 4;
    std::int64_t s = isqrt(m);
    std::int64_t P = 0, Q = 1;
    int128 pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;
    while (true) {
      std::int64_t aq = (P + s) / Q;
      int128 p = checked_add(checked_mul(aq, pm1), pm2);
      int128 q = checked_add(checked_mul(aq, qm1), qm2);
      pm2 = pm1; pm1 = p;
      qm2 = qm1; qm1 = q;
      P = aq * Q - P;
      Q = (m - P * P) / Q;
      if (Q == 1) break;  // end of period: p_{l-1} + q_{l-1} sqrt(m) is the unit
    }
    x = checked_mul(int128{2}, pm1);
    y = qm1;
  }

  int128 norm4 = checked_add(checked_mul(x, x), -checked_mul(checked_mul(int128{D}, y), y));
  if (!(norm4 == 4 || norm4 == -4))
    throw std::logic_error("pell_fundamental: convergent does not satisfy the +-4 norm condition");
  PellUnit u;
  u.D = D;
  u.x = x;
  u.y = y;
  u.norm = static_cast<int>(norm4 / 4);
  u.unit_value = (int128_to_double(x) + int128_to_double(y) * std::sqrt(static_cast<double>(D))) / 2.0;
  if (!(u.unit_value > 1.0)) throw std::logic_error("pell_fundamental: unit not > 1");
  return u;
}

}  // namespace zetalab::numerics
