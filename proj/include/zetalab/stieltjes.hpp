#pragma once

// Generalized Stieltjes constants gamma_k(a): an integral-representation
// evaluator, an independent tail-corrected limit-formula oracle, and the
// summatory-series engine for linear combinations of Hurwitz zeta values.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "zetalab/common.hpp"
#include "zetalab/numerics.hpp"
#include "zetalab/special.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab::stieltjes {

// Terms beyond this index contribute below 1e-18 to every summatory series
// with |s - 1| <= 3 that the library evaluates; the integral representation
// stays well-conditioned up to here.
inline constexpr int kMaxGammaIndex = 32;

struct GammaValue {
  double value = 0.0;
  double err_estimate = 0.0;
};

struct LaurentCoefficients {
  Rational a;
  std::vector<std::tuple<int, double, double>> gammas;  // (k, gamma_k(a), err)
};

// gamma_k(a) through the integral representation
//   gamma_k(a) = ln^k(a)/(2a) - ln^{k+1}(a)/(k+1)
//              + (2/a) Re Int_0^inf (y/a - i) ln^k(a - iy)
//                        / ((1 + y^2/a^2)(e^{2 pi y} - 1)) dy.
// The integrand decays like e^{-2 pi y}; it is truncated at y = 10 and the
// remainder is carried as an error bound, not computed.
inline GammaValue stieltjes_gamma(int k, double a) {
  if (k < 0 || k > kMaxGammaIndex)
    throw std::invalid_argument("stieltjes_gamma: k out of supported range");
  if (!(a > 0.0)) throw std::invalid_argument("stieltjes_gamma: need a > 0");

  const double log_a = std::log(a);
  auto integrand = [k, a](double y) {
    std::complex<double> w(a, -y);
    // a > 0 keeps a - iy in the right half-plane: principal log, no branch
    // crossing possible.
    std::complex<double> lw = std::log(w);
    std::complex<double> p(1.0, 0.0);
    for (int i = 0; i < k; ++i) p *= lw;
    std::complex<double> num = (std::complex<double>(y / a, -1.0)) * p;
    double den = (1.0 + y * y / (a * a)) * std::expm1(2.0 * std::numbers::pi * y);
    return num.real() / den;
  };
  const double cutoff = 10.0;
  auto q = numerics::integrate_finite(integrand, 0.0, cutoff, 1e-13);

  // Tail majorant: |integrand| <= (a/y)|ln(a-iy)|^k e^{-2 pi y} / (1 - e^{-2 pi y}) roughly.
  double log_mag = std::hypot(std::log(std::hypot(a, cutoff)), std::numbers::pi / 2.0);
  double tail = (a / cutoff) * std::pow(std::max(log_mag, 1.0), k) *
                std::exp(-2.0 * std::numbers::pi * cutoff) / (2.0 * std::numbers::pi);

  GammaValue g;
  g.value = std::pow(log_a, k) / (2.0 * a) - std::pow(log_a, k + 1) / (k + 1) + 2.0 / a * q.value;
  g.err_estimate = 2.0 / a * (q.error_estimate + tail);
  return g;
}

inline LaurentCoefficients laurent_coefficients(const Rational& a, int k_max) {
  LaurentCoefficients lc;
  lc.a = a;
  double ad = a.to_double();
  for (int k = 0; k <= k_max; ++k) {
    auto g = stieltjes_gamma(k, ad);
    lc.gammas.emplace_back(k, g.value, g.err_estimate);
  }
  return lc;
}

// ---------------------------------------------------------------------------
// Independent oracle: tail-corrected limit formula
//   gamma_k(a) = lim_M [ sum_{j=0}^{M} ln^k(j+a)/(j+a) - ln^{k+1}(M+a)/(k+1) ],
// with the Euler-Maclaurin boundary corrections at M applied from exact
// derivative coefficients of ln^k(u)/u. Evaluations at M, 2M and 4M must
// shrink monotonically; otherwise the oracle reports instability.

class oracle_instability : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// n-th derivative of g(u) = ln^k(u)/u as sum_j coeff[j] ln^j(u) u^{-(n+1)}.
inline std::vector<double> log_power_derivative_coeffs(int k, int order) {
  std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
  c[static_cast<std::size_t>(k)] = 1.0;
  for (int n = 0; n < order; ++n) {
    std::vector<double> next(c.size(), 0.0);
    for (int j = 0; j <= k; ++j) {
      if (c[j] == 0.0) continue;
      if (j >= 1) next[j - 1] += j * c[j];
      next[j] -= (n + 1) * c[j];
    }
    c = std::move(next);
  }
  return c;
}

inline double eval_log_poly(const std::vector<double>& c, double log_u) {
  double v = 0.0;
  for (std::size_t j = c.size(); j-- > 0;) v = v * log_u + c[j];
  return v;
}

inline double oracle_at(int k, double a, std::int64_t m) {
  numerics::CompensatedAccumulator acc;
  for (std::int64_t j = 0; j < m; ++j) {
    double u = j + a;
    acc.add(std::pow(std::log(u), k) / u);
  }
  double u = m + a;
  double lu = std::log(u);
  acc.add(-std::pow(lu, k + 1) / (k + 1));
  acc.add(0.5 * std::pow(lu, k) / u);
  constexpr int kCorrections = 5;
  double upow = u * u;  // u^{n+1} for n = 1
  for (int r = 1; r <= kCorrections; ++r) {
    int n = 2 * r - 1;
    auto coeffs = log_power_derivative_coeffs(k, n);
    double fact = 1.0;
    for (int i = 2; i <= 2 * r; ++i) fact *= i;
    acc.add(-special::bernoulli_d(2 * r) / fact * eval_log_poly(coeffs, lu) / upow);
    upow *= u * u;
  }
  return acc.value();
}

}  // namespace detail

inline double stieltjes_oracle(int k, double a, std::int64_t m_base = 64) {
  if (k < 0 || k > 12) throw std::invalid_argument("stieltjes_oracle: supported for k <= 12");
  if (!(a > 0.0)) throw std::invalid_argument("stieltjes_oracle: need a > 0");
  if (m_base < 8) m_base = 8;
  double v1 = detail::oracle_at(k, a, m_base);
  double v2 = detail::oracle_at(k, a, 2 * m_base);
  double v4 = detail::oracle_at(k, a, 4 * m_base);
  double d1 = std::abs(v2 - v1);
  double d2 = std::abs(v4 - v2);
  // Input-rounding noise floor: the raw sum carries |terms| totalling about
  // ln^{k+1}(4M)/(k+1), each with a few-ulp error from log/pow.
  double lu = std::log(4.0 * m_base + a);
  double noise = 256.0 * std::numeric_limits<double>::epsilon() *
                 (std::abs(v4) + std::pow(lu, k + 1) / (k + 1) + 1.0);
  if (d2 > std::max(d1, noise)) {
    std::ostringstream os;
    os << "stieltjes_oracle: doubling sequence not contracting (k=" << k << ", a=" << a
       << ", diffs " << d1 << " -> " << d2 << ", noise floor " << noise << ")";
    throw oracle_instability(os.str());
  }
  // median of the three evaluations
  double lo = std::min({v1, v2, v4}), hi = std::max({v1, v2, v4});
  return v1 + v2 + v4 - lo - hi;
}

// ---------------------------------------------------------------------------
// Summatory engine: sum_n (-x)^n / n! * sum_i c_i gamma_n(a_i)
//                 = sum_i c_i zeta(1+x, a_i) - (sum_i c_i)/x.

struct SummatorySpec {
  std::vector<std::pair<Rational, Rational>> terms;  // (coefficient, a)
  double x = 0.0;                                    // s - 1
  int n_max = 40;
};

struct SummatoryResult {
  double closed_form = 0.0;
  std::vector<double> partial_sums;  // S_0 .. S_N
  std::vector<double> partial_errs;
};

inline void validate_spec(const SummatorySpec& spec) {
  Rational csum(0);
  for (const auto& [c, a] : spec.terms) {
    if (!(a.to_double() > 0.0)) throw std::invalid_argument("summatory: shifts must be positive");
    csum = csum + c;
  }
  if (spec.x == 0.0 && !(csum == Rational(0)))
    throw std::invalid_argument("summatory: x = 0 exposes the pole unless coefficients cancel");
}

inline SummatoryResult summatory_eval(const SummatorySpec& spec) {
  validate_spec(spec);
  SummatoryResult res;

  Rational csum(0);
  for (const auto& [c, a] : spec.terms) csum = csum + c;

  if (spec.x == 0.0) {
    // only n = 0 survives: sum_i c_i gamma_0(a_i) = -sum_i c_i psi(a_i)
    double v = 0.0;
    for (const auto& [c, a] : spec.terms) v -= c.to_double() * special::digamma(a.to_double());
    res.closed_form = v;
  } else {
    numerics::CompensatedAccumulator acc;
    for (const auto& [c, a] : spec.terms)
      acc.add(c.to_double() * zeta::hurwitz_zeta(1.0 + spec.x, a.to_double()));
    acc.add(-csum.to_double() / spec.x);
    res.closed_form = acc.value();
  }

  // Demonstrative route: partial sums of the Stieltjes expansion. Indices
  // past kMaxGammaIndex contribute below 1e-18 for |x| <= 3 and are frozen.
  int cap = std::min(spec.n_max, kMaxGammaIndex);
  std::vector<std::vector<GammaValue>> g(spec.terms.size());
  for (std::size_t i = 0; i < spec.terms.size(); ++i) {
    double a = spec.terms[i].second.to_double();
    g[i].reserve(cap + 1);
    for (int n = 0; n <= cap; ++n) g[i].push_back(stieltjes_gamma(n, a));
  }
  numerics::CompensatedAccumulator sum;
  numerics::CompensatedAccumulator err;
  double xpow = 1.0;  // (-x)^n / n!
  for (int n = 0; n <= spec.n_max; ++n) {
    if (n <= cap) {
      for (std::size_t i = 0; i < spec.terms.size(); ++i) {
        double c = spec.terms[i].first.to_double();
        sum.add(c * xpow * g[i][n].value);
        err.add(std::abs(c * xpow) * g[i][n].err_estimate);
      }
    }
    res.partial_sums.push_back(sum.value());
    res.partial_errs.push_back(err.value());
    xpow *= -spec.x / (n + 1);
  }
  return res;
}

struct ConvergenceRow {
  int n = 0;
  double partial_sum = 0.0;
  double abs_diff = 0.0;  // |partial_sum - closed_form|
};

inline std::vector<ConvergenceRow> convergence_profile(const SummatorySpec& spec) {
  std::vector<ConvergenceRow> rows;
  if (spec.terms.empty()) {
    for (int n = 0; n <= spec.n_max; ++n) rows.push_back({n, 0.0, 0.0});
    return rows;
  }
  auto res = summatory_eval(spec);
  for (int n = 0; n < static_cast<int>(res.partial_sums.size()); ++n)
    rows.push_back({n, res.partial_sums[n], std::abs(res.partial_sums[n] - res.closed_form)});
  return rows;
}

}  // namespace zetalab::stieltjes
