#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "oracles.hpp"
#include "zetalab/numerics.hpp"
#include "zetalab/special.hpp"

using namespace zetalab;
using namespace zetalab::special;

namespace {
constexpr double kPi = std::numbers::pi;

// psi^{(3)}(a) by direct summation of 6 / (n+a)^4 with an integral tail.
double psi3_series(double a) {
  long double s = 0.0L;
  const int n = 20000;
  for (int j = 0; j < n; ++j) {
    long double u = j + static_cast<long double>(a);
    s += 6.0L / (u * u * u * u);
  }
  long double u = n + static_cast<long double>(a);
  s += 2.0L / (u * u * u) + 3.0L / (u * u * u * u);  // Euler-Maclaurin tail
  return static_cast<double>(s);
}
}  // namespace

TEST_CASE("digamma: basic values and recurrence") {
  double gamma_ref = oracles::euler_gamma();
  CHECK(digamma(1.0) == doctest::Approx(-gamma_ref).epsilon(1e-13));
  CHECK(digamma(2.0) == doctest::Approx(1.0 - gamma_ref).epsilon(1e-13));
  CHECK(digamma(0.75) - digamma(0.25) == doctest::Approx(kPi).epsilon(1e-13));
  CHECK_THROWS_AS(digamma(0.0), std::invalid_argument);
  CHECK_THROWS_AS(digamma(-1.5), std::invalid_argument);
}

TEST_CASE("digamma reflection on the eighths grid") {
  for (int i = 1; i <= 7; ++i) {
    double x = i / 8.0;
    double lhs = digamma(1.0 - x) - digamma(x);
    CHECK(std::abs(lhs - kPi / std::tan(kPi * x)) < 1e-11);
  }
}

TEST_CASE("log_minus_digamma stays accurate for large arguments") {
  CHECK(log_minus_digamma(3.0) == doctest::Approx(std::log(3.0) - digamma(3.0)).epsilon(1e-13));
  CHECK(log_minus_digamma(1e8) == doctest::Approx(0.5e-8).epsilon(1e-8));
  CHECK(log_minus_digamma(1e300) > 0.0);
}

TEST_CASE("polygamma: values and the series oracle") {
  CHECK(polygamma(1, 1.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));
  // tetragamma difference used in the Prop 4 derivation
  CHECK(polygamma(2, 2.0 / 3.0) - polygamma(2, 1.0 / 3.0) ==
        doctest::Approx(8.0 * std::pow(kPi, 3) / std::pow(3.0, 1.5)).epsilon(1e-12));
  // psi''' difference against the independent series oracle
  CHECK(polygamma(3, 0.25) - polygamma(3, 0.75) ==
        doctest::Approx(psi3_series(0.25) - psi3_series(0.75)).epsilon(1e-11));
  CHECK_THROWS_AS(polygamma(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(polygamma(7, 1.0), std::invalid_argument);
}

TEST_CASE("psi''' reflection holds in sum form") {
  // psi'''(z) + psi'''(1-z) = 2 pi^4 (2 + cos 2 pi z) csc^4(pi z); the
  // difference form printed in the source display does not close (its
  // residual is 2 psi'''(1-z)), which the audit records as a note.
  for (int i = 1; i <= 7; ++i) {
    double z = i / 8.0;
    double lhs = polygamma(3, 1.0 - z) + polygamma(3, z);
    double csc = 1.0 / std::sin(kPi * z);
    double rhs = 2.0 * std::pow(kPi, 4) * (2.0 + std::cos(2.0 * kPi * z)) * std::pow(csc, 4);
    CHECK(std::abs(lhs - rhs) < 1e-8 * std::pow(kPi, 4));
  }
}

TEST_CASE("polygamma matches the Hurwitz bridge values") {
  // psi^{(m)}(a) = (-1)^{m+1} m! zeta(m+1, a); checked numerically against
  // the series oracle for m = 3 above; here spot primes the m = 1 case.
  CHECK(polygamma(1, 0.25) == doctest::Approx(kPi * kPi + 8.0 * oracles::catalan()).epsilon(1e-12));
}

TEST_CASE("log_gamma: values and reflection") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(0.5) == doctest::Approx(std::log(std::sqrt(kPi))).epsilon(1e-13));
  CHECK(std::exp(log_gamma(0.25) + log_gamma(0.75)) ==
        doctest::Approx(kPi * std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(log_gamma(0.0), std::invalid_argument);
}

TEST_CASE("beta_integral matches quadrature") {
  CHECK(beta_integral(1.0, 0.5) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(beta_integral(2.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(beta_integral(2.0, 0.5) == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  for (auto [a, b] : {std::pair{1.0, 0.5}, {2.0, 0.5}}) {
    auto q = numerics::integrate_to_inf(
        [a, b](double t) { return std::pow(1.0 + t, -a) * std::pow(t, -b); }, 0.0, 1e-12);
    CHECK(beta_integral(a, b) == doctest::Approx(q.value).epsilon(1e-10));
  }
  CHECK_THROWS_AS(beta_integral(0.5, 0.4), std::invalid_argument);
  CHECK_THROWS_AS(beta_integral(3.0, 1.5), std::invalid_argument);
}

TEST_CASE("bessel_k0: reference values") {
  CHECK(std::abs(bessel_k0(0.5) - 0.92441907122766586178) < 1e-14);
  CHECK(std::abs(bessel_k0(1.0) - 0.42102443824070833334) < 1e-14);
  CHECK(std::abs(bessel_k0(2.0) - 0.11389387274953343565) < 1e-14);
  CHECK(std::abs(bessel_k0(2.5) - 0.062347553200366186029) < 1e-14);
  CHECK(std::abs(bessel_k0(3.7) - 0.015630659921626661612) < 1e-14);
  CHECK(std::abs(bessel_k0(7.1) - 0.00038173938520038213289) < 1e-14);
  CHECK(bessel_k0(40.0) > 0.0);
  CHECK(bessel_k0(40.0) < 1e-17);
  CHECK_THROWS_AS(bessel_k0(0.0), std::invalid_argument);
}

TEST_CASE("bessel_k0: quadrature oracle and the two-sided integral identity") {
  auto oracle =
      numerics::integrate_to_inf([](double t) { return std::exp(-std::cosh(t)); }, 0.0, 1e-13);
  CHECK(bessel_k0(1.0) == doctest::Approx(oracle.value).epsilon(1e-12));

  for (double c : {2.5, 6.0, kPi * std::sqrt(11.0)}) {
    auto q = numerics::integrate_to_inf(
        [c](double y) { return std::exp(-c * (y + 1.0 / y) / 2.0) / y; }, 0.0, 1e-15);
    double lhs = 2.0 * q.value;
    double rhs = 4.0 * bessel_k0(c);
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
  }
}

TEST_CASE("bessel_k0 branches agree across the series/CF2 switch") {
  // the true variation over 2e-12 is 2e-12 K1(2) ~ 2.8e-13; anything beyond
  // a small multiple of that would be a branch mismatch
  CHECK(std::abs(bessel_k0(2.0 - 1e-12) - bessel_k0(2.0 + 1e-12)) < 2e-12);
}

TEST_CASE("clausen2: special angles") {
  CHECK(clausen2(0.0) == 0.0);
  CHECK(std::abs(clausen2(kPi)) < 1e-12);
  CHECK(clausen2(kPi / 2.0) == doctest::Approx(oracles::catalan()).epsilon(1e-13));
  CHECK(clausen2(-kPi / 2.0) == doctest::Approx(-oracles::catalan()).epsilon(1e-13));
  // quadrature route: Cl2(t) = -int_0^t ln|2 sin(u/2)| du
  double t = 1.1;
  auto q = numerics::integrate_finite(
      [](double u) { return -std::log(std::abs(2.0 * std::sin(u / 2.0))); }, 0.0, t, 1e-12);
  CHECK(clausen2(t) == doctest::Approx(q.value).epsilon(1e-11));
}

TEST_CASE("clausen2 duplication") {
  for (double t : {0.2, 0.5, 0.9, 1.3, 1.5}) {
    CHECK(std::abs(clausen2(2.0 * t) - (2.0 * clausen2(t) - 2.0 * clausen2(kPi - t))) < 1e-11);
  }
}

TEST_CASE("bloch_wigner: real axis, conjugation, and i") {
  CHECK(bloch_wigner({0.5, 0.0}) == doctest::Approx(0.0).epsilon(1e-14));
  std::complex<double> z1(0.5, std::sqrt(23.0) / 2.0);
  CHECK(bloch_wigner(std::conj(z1)) == doctest::Approx(-bloch_wigner(z1)).epsilon(1e-13));
  CHECK(bloch_wigner({0.0, 1.0}) == doctest::Approx(oracles::catalan()).epsilon(1e-13));
  CHECK_THROWS_AS(bloch_wigner({0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(bloch_wigner({1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("bloch_wigner five-term relation") {
  using C = std::complex<double>;
  for (auto [x, y] : {std::pair{C(0.3, 0.4), C(-0.2, 0.7)},
                      {C(1.4, 2.2), C(0.1, -0.6)},
                      {C(-1.1, 0.8), C(2.5, 1.5)}}) {
    C xy = x * y;
    double total = bloch_wigner(x) + bloch_wigner(y) + bloch_wigner((1.0 - x) / (1.0 - xy)) +
                   bloch_wigner(1.0 - xy) + bloch_wigner((1.0 - y) / (1.0 - xy));
    CHECK(std::abs(total) < 1e-9);
  }
}

TEST_CASE("euler numbers: exact table") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(6) == -61);
  CHECK(euler_number(8) == 1385);
  CHECK(euler_number(10) == -50521);
  CHECK(euler_number(7) == 0);
  for (int k = 1; k <= 15; ++k) {  // alternating signs on even indices
    double a = int128_to_double(euler_number(2 * k));
    double b = int128_to_double(euler_number(2 * (k - 1)));
    CHECK(a * b < 0.0);
  }
  CHECK_THROWS_AS(euler_number(200), overflow_error);
}

TEST_CASE("euler numbers generate sech") {
  // truncation of the exact-table sum at K terms is bounded by the next
  // coefficient, |E_{2K+2}/(2K+2)!| ~ 2 (2/pi)^{2K+3}; at x = 1, K = 15 that
  // is ~7e-7, and the frozen value reflects it
  double x = 1.0;
  numerics::CompensatedAccumulator acc;
  acc.add(1.0);
  double fact = 1.0, xp = 1.0;
  for (int k = 1; k <= 15; ++k) {
    fact *= (2.0 * k - 1.0) * (2.0 * k);
    xp *= x * x;
    acc.add(int128_to_double(euler_number(2 * k)) / fact * xp);
  }
  double next_term = std::abs(euler_over_factorial(16));
  CHECK(std::abs(acc.value() - 1.0 / std::cosh(x)) < 2.0 * next_term);
  CHECK(next_term < 1e-6);

  // with the scaled coefficients the series reaches 1e-12 by K = 40
  numerics::CompensatedAccumulator full;
  full.add(1.0);
  for (int k = 1; k <= 40; ++k) full.add(euler_over_factorial(k));
  CHECK(std::abs(full.value() - 1.0 / std::cosh(1.0)) < 1e-12);
}

TEST_CASE("euler_over_factorial matches the exact table") {
  double fact = 1.0;
  for (int k = 0; k <= 14; ++k) {
    if (k > 0) fact *= (2.0 * k - 1.0) * (2.0 * k);
    CHECK(euler_over_factorial(k) ==
          doctest::Approx(int128_to_double(euler_number(2 * k)) / fact).epsilon(1e-13));
  }
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(3) == Rational(0));
  CHECK(bernoulli(24) == Rational(-236364091, 2730));
  CHECK_THROWS_AS(bernoulli(100), overflow_error);
}
