#pragma once

// Scalar special functions: digamma/polygamma/log-gamma with Bernoulli
// asymptotics, the Beta integral, modified Bessel K0, the complex
// dilogarithm with Clausen Cl2 and Bloch-Wigner D built on top, and the
// exact Bernoulli / Euler number tables.

#include <cmath>
#include <complex>
#include <cstdint>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "zetalab/common.hpp"
#include "zetalab/numerics.hpp"

namespace zetalab::special {

inline constexpr double kEulerGamma = 0.577215664901532860606512090082;

// ---------------------------------------------------------------------------
// Exact number tables. Built once on first use, immutable afterwards.

namespace detail {

struct BernoulliData {
  std::vector<Rational> values;  // B_0, B_1, B_2, ... (B_1 = -1/2 convention)
};

inline const BernoulliData& bernoulli_data() {
  static const BernoulliData data = [] {
    BernoulliData d;
    // B_m from sum_{j<=m} C(m+1, j) B_j = 0; stop before i128 overflow.
    d.values.push_back(Rational(1));
    try {
      for (int m = 1; m <= 40; ++m) {
        Rational acc(0);
        Rational binom(1);  // C(m+1, 0)
        for (int j = 0; j < m; ++j) {
          acc = acc + binom * d.values[j];
          binom = binom * Rational(int128{m + 1 - j}, int128{j + 1});
        }
        d.values.push_back(acc * Rational(-1, int128{m + 1}));
      }
    } catch (const overflow_error&) {
      // table ends at the last exactly representable entry
    }
    return d;
  }();
  return data;
}

struct EulerData {
  std::vector<int128> values;  // E_0, E_2, E_4, ... at even indices
};

inline const EulerData& euler_data() {
  static const EulerData data = [] {
    EulerData d;
    // E_{2k} = -sum_{j<k} C(2k, 2j) E_{2j}
    d.values.push_back(1);
    try {
      for (int k = 1; k <= 30; ++k) {
        int128 acc = 0;
        for (int j = 0; j < k; ++j) {
          // C(2k, 2j) by the multiplicative formula in checked arithmetic
          int128 c = 1;
          for (int i = 1; i <= 2 * j; ++i)
            c = checked_mul(c, int128{2 * k - 2 * j + i}) / i;
          acc = checked_add(acc, checked_mul(c, d.values[j]));
        }
        d.values.push_back(-acc);
      }
    } catch (const overflow_error&) {
    }
    return d;
  }();
  return data;
}

}  // namespace detail

// Exact Bernoulli number B_n (B_1 = -1/2 convention). Indices past the
// exactly representable range are rejected.
inline Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  if (n > 1 && n % 2 == 1) return Rational(0);
  const auto& d = detail::bernoulli_data();
  if (static_cast<std::size_t>(n) >= d.values.size())
    throw overflow_error("bernoulli: index exceeds exact-table range");
  return d.values[static_cast<std::size_t>(n)];
}

inline double bernoulli_d(int n) { return bernoulli(n).to_double(); }

// Exact Euler number E_n; odd indices vanish. Overflowing indices rejected.
inline int128 euler_number(int n) {
  if (n < 0) throw std::invalid_argument("euler_number: negative index");
  if (n % 2 == 1) return 0;
  const auto& d = detail::euler_data();
  std::size_t k = static_cast<std::size_t>(n / 2);
  if (k >= d.values.size())
    throw overflow_error("euler_number: index exceeds exact-table range");
  return d.values[k];
}

// Scaled coefficients e_k = E_{2k} / (2k)! as doubles, past the exact-table
// range; these are the sech Taylor coefficients and stay well-conditioned.
inline double euler_over_factorial(int k) {
  static const std::vector<double> table = [] {
    constexpr int kMax = 512;
    std::vector<double> e(kMax + 1, 0.0);
    std::vector<double> invf(kMax + 1, 0.0);  // invf[m] = 1/(2m)!
    double cur = 1.0;
    for (int m = 0; m <= kMax; ++m) {
      invf[m] = cur;
      cur /= (2.0 * m + 1.0) * (2.0 * m + 2.0);  // underflows to 0 for huge m, which is fine
    }
    e[0] = 1.0;
    for (int k = 1; k <= kMax; ++k) {
      numerics::CompensatedAccumulator acc;
      for (int j = 0; j < k; ++j) acc.add(e[j] * invf[k - j]);
      e[k] = -acc.value();
    }
    return e;
  }();
  if (k < 0 || k >= static_cast<int>(table.size()))
    throw std::invalid_argument("euler_over_factorial: index out of range");
  return table[k];
}

// ---------------------------------------------------------------------------
// Digamma family.

namespace detail {

inline constexpr double kShiftThreshold = 10.0;
inline constexpr int kAsymptoticTerms = 8;

}  // namespace detail

inline double digamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("digamma: need x > 0");
  double shift = 0.0;
  while (x < detail::kShiftThreshold) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  double inv2 = 1.0 / (x * x);
  double series = 0.0, p = inv2;
  for (int j = 1; j <= detail::kAsymptoticTerms; ++j) {
    series += bernoulli_d(2 * j) / (2 * j) * p;
    p *= inv2;
  }
  return shift + std::log(x) - 0.5 / x - series;
}

// ln x - psi(x), computed without cancellation for large x.
inline double log_minus_digamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("log_minus_digamma: need x > 0");
  if (x < detail::kShiftThreshold) return std::log(x) - digamma(x);
  double inv2 = 1.0 / (x * x);
  double series = 0.0, p = inv2;
  for (int j = 1; j <= detail::kAsymptoticTerms; ++j) {
    series += bernoulli_d(2 * j) / (2 * j) * p;
    p *= inv2;
  }
  return 0.5 / x + series;
}

// psi^{(m)}(x) for 1 <= m <= 6.
inline double polygamma(int m, double x) {
  if (m < 1 || m > 6) throw std::invalid_argument("polygamma: order must be in [1, 6]");
  if (!(x > 0.0)) throw std::invalid_argument("polygamma: need x > 0");
  double fact_m = 1.0;
  for (int i = 2; i <= m; ++i) fact_m *= i;
  numerics::CompensatedAccumulator shift;
  while (x < detail::kShiftThreshold) {
    // psi^{(m)}(x) = psi^{(m)}(x+1) + (-1)^{m+1} m! / x^{m+1}
    shift.add((m % 2 == 0 ? -1.0 : 1.0) * fact_m * std::pow(x, -(m + 1)));
    x += 1.0;
  }
  double inv = 1.0 / x;
  double fact_m1 = fact_m / m;  // (m-1)!
  double series = fact_m1 * std::pow(inv, m) + fact_m * 0.5 * std::pow(inv, m + 1);
  for (int j = 1; j <= detail::kAsymptoticTerms; ++j) {
    double fall = 1.0;
    for (int i = 2 * j + 1; i <= 2 * j + m - 1; ++i) fall *= i;  // (2j+m-1)!/(2j)!
    series += bernoulli_d(2 * j) * fall * std::pow(inv, 2 * j + m);
  }
  double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m-1}
  return shift.value() + sign * series;
}

inline double log_gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("log_gamma: need x > 0");
  double shift = 0.0;
  while (x < detail::kShiftThreshold) {
    shift -= std::log(x);
    x += 1.0;
  }
  double inv = 1.0 / x, inv2 = inv * inv;
  double series = 0.0, p = inv;
  for (int j = 1; j <= detail::kAsymptoticTerms; ++j) {
    series += bernoulli_d(2 * j) / (2.0 * j * (2.0 * j - 1.0)) * p;
    p *= inv2;
  }
  return shift + (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

// int_0^inf dt / ((1+t)^a t^b) = Gamma(1-b) Gamma(a+b-1) / Gamma(a),
// valid for a + b > 1, b < 1, a > 0.
inline double beta_integral(double a, double b) {
  if (!(a + b > 1.0 && b < 1.0 && a > 0.0))
    throw std::invalid_argument("beta_integral: need a+b > 1, b < 1, a > 0");
  return std::exp(log_gamma(1.0 - b) + log_gamma(a + b - 1.0) - log_gamma(a));
}

// ---------------------------------------------------------------------------
// Modified Bessel K0. Ascending series for x <= 2; Temme's continued
// fraction (CF2) for the exponentially scaled value beyond.

inline double bessel_k0(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("bessel_k0: need x > 0");
  if (x <= 2.0) {
    double q = 0.25 * x * x;
    double i0 = 1.0, term = 1.0;
    double sum_h = 0.0, hk = 0.0;
    for (int k = 1; k <= 40; ++k) {
      term *= q / (static_cast<double>(k) * k);
      i0 += term;
      hk += 1.0 / k;
      sum_h += term * hk;
      if (term < 1e-19) break;
    }
    return -(std::log(0.5 * x) + kEulerGamma) * i0 + sum_h;
  }
  // CF2 (Temme / Thompson-Barnett), nu = 0.
  constexpr double eps = 1e-16;
  const double a1 = 0.25;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d, delh = d;
  double q1 = 0.0, q2 = 1.0;
  double q = a1, c = a1, a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i <= 3000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) <= eps) {
      return std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
    }
  }
  throw std::runtime_error("bessel_k0: CF2 failed to converge");
}

// ---------------------------------------------------------------------------
// Complex dilogarithm and friends.

namespace detail {

// Li2 on the reduced domain |z| <= 1, Re z <= 1/2, via the series in
// u = -log(1-z); converges like (|u|/2pi)^n, at worst ~0.28 per term here.
inline std::complex<double> li2_reduced(std::complex<double> z) {
  std::complex<double> u = -std::log(1.0 - z);
  std::complex<double> u2 = u * u;
  // sum_{j>=0} B_j u^{j+1} / (j+1)!; odd j > 1 vanish
  std::complex<double> sum = u - u2 / 4.0;
  std::complex<double> p = u * u2;  // u^{2j+1} for j = 1
  double fact = 6.0;                // (2j+1)! for j = 1
  for (int j = 1; j <= 22; ++j) {
    std::complex<double> term = bernoulli_d(2 * j) / fact * p;
    sum += term;
    if (std::norm(term) < 1e-36 * std::norm(sum)) break;
    p *= u2;
    fact *= (2.0 * j + 2.0) * (2.0 * j + 3.0);
  }
  return sum;
}

}  // namespace detail

// Principal-branch dilogarithm Li2(z) for complex z.
inline std::complex<double> dilog(std::complex<double> z) {
  constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  if (z == std::complex<double>(0.0, 0.0)) return {0.0, 0.0};
  if (z == std::complex<double>(1.0, 0.0)) return {pi2_6, 0.0};
  std::complex<double> pre(0.0, 0.0);
  double sign = 1.0;
  if (std::abs(z) > 1.0) {  // inversion
    std::complex<double> lz = std::log(-z);
    pre = -pi2_6 - 0.5 * lz * lz;
    z = 1.0 / z;
    sign = -1.0;
  }
  if (z.real() > 0.5) {  // reflection
    std::complex<double> refl = pi2_6 - std::log(z) * std::log(1.0 - z);
    return pre + sign * (refl - detail::li2_reduced(1.0 - z));
  }
  return pre + sign * detail::li2_reduced(z);
}

// Clausen function Cl2(theta) = Im Li2(e^{i theta}), any real theta.
inline double clausen2(double theta) {
  double t = std::fmod(theta, 2.0 * std::numbers::pi);
  if (t < 0.0) t += 2.0 * std::numbers::pi;
  if (t == 0.0) return 0.0;
  return dilog(std::polar(1.0, t)).imag();
}

// Bloch-Wigner dilogarithm D(z) = Im Li2(z) + arg(1-z) ln|z|.
inline double bloch_wigner(std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0) || z == std::complex<double>(1.0, 0.0))
    throw std::invalid_argument("bloch_wigner: undefined at z = 0 and z = 1");
  return dilog(z).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
}

}  // namespace zetalab::special
