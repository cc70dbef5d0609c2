#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "zetalab/lfunctions.hpp"

using namespace zetalab;
using namespace zetalab::lfunctions;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("l_value: pinned closed forms") {
  CHECK(std::abs(l_value(-4, 2.0).value - oracles::catalan()) < 1e-11);
  CHECK(std::abs(l_value(5, 2.0).value - 4.0 * kPi * kPi / (25.0 * std::sqrt(5.0))) < 1e-11);
  CHECK(std::abs(l_value(-3, 1.0).value - kPi / (3.0 * std::sqrt(3.0))) < 1e-12);
  CHECK(std::abs(l_value(8, 1.0).value - 2.0 * std::log(1.0 + std::sqrt(2.0)) / std::sqrt(8.0)) <
        1e-12);
  CHECK(std::abs(l_value(1, 2.0).value - kPi * kPi / 6.0) < 1e-12);
  CHECK_THROWS_AS(l_value(1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(l_value(6, 2.0), std::invalid_argument);
}

TEST_CASE("route agreement: Hurwitz vs Euler product") {
  for (std::int64_t d : {-3, -4, 5, -7, 8, -8, 12, -11, -23}) {
    // s = 2 has the slowest tail; run it at the deep limit
    auto h2 = l_value(d, 2.0);
    auto e2 = l_value_euler(d, 2.0, 10000000);
    CHECK(std::abs(h2.value - e2.value) <= e2.err_estimate + 1e-10);
    for (double s : {3.0, 4.0}) {
      auto h = l_value(d, s);
      auto e = l_value_euler(d, s, 1000000);
      CHECK(std::abs(h.value - e.value) <= e.err_estimate + 1e-10);
    }
  }
  CHECK_THROWS_AS(l_value_euler(-4, 1.0, 1000), std::invalid_argument);
}

TEST_CASE("functional equation: residuals across the critical line") {
  for (std::int64_t d : {-3, -4, 5, -7, 8, -8, 12}) {
    for (double s : {0.25, 0.75, 2.0, 3.0}) {
      double via_fe = l_value_via_fe(d, s).value;
      double direct = l_value(d, 1.0 - s).value;
      CHECK(std::abs(via_fe - direct) < 1e-9);
    }
  }
}

TEST_CASE("functional equation: fixed point at the center for D = -4") {
  // at s = 1/2, k = 4 the prefactor 2 (2 pi)^{-1/2} 4^0 sin(pi/4) Gamma(1/2) is 1
  double lhs = l_value_via_fe(-4, 0.5).value;
  double rhs = l_value(-4, 0.5).value;
  CHECK(std::abs(lhs - rhs) < 1e-12);
  CHECK_THROWS_AS(l_value_via_fe(-4, 0.0), std::invalid_argument);
}

TEST_CASE("l_prime_1 against a central finite difference") {
  for (std::int64_t d : {-4, -3}) {
    double h = 1e-4;
    double fd = (l_value(d, 1.0 + h).value - l_value(d, 1.0 - h).value) / (2.0 * h);
    CHECK(std::abs(l_prime_1(d) - fd) < 1e-7);
  }
}

TEST_CASE("euler_kronecker constants and closed forms") {
  double s = euler_kronecker(-4);
  CHECK(std::abs(s - 0.8228252496) < 1e-9);
  double closed4 = std::log(2.0 * kPi * std::exp(2.0 * special::kEulerGamma) *
                            std::exp(2.0 * special::log_gamma(0.75)) /
                            std::exp(2.0 * special::log_gamma(0.25)));
  CHECK(std::abs(s - closed4) < 1e-9);
  double closed3 = std::log(2.0 * kPi * std::exp(2.0 * special::kEulerGamma) *
                            std::exp(3.0 * special::log_gamma(2.0 / 3.0)) /
                            std::exp(3.0 * special::log_gamma(1.0 / 3.0)));
  CHECK(std::abs(euler_kronecker(-3) - closed3) < 1e-9);
}

TEST_CASE("beta_odd closed forms") {
  CHECK(std::abs(beta_odd(0) - kPi / 4.0) < 1e-15);
  CHECK(std::abs(beta_odd(1) - std::pow(kPi, 3) / 32.0) < 1e-14);
  CHECK(std::abs(beta_odd(2) - 5.0 * std::pow(kPi, 5) / 1536.0) < 1e-13);
  CHECK(std::abs(beta_odd(2) - l_value(-4, 5.0).value) < 1e-11);
  CHECK_THROWS_AS(beta_odd(11), std::invalid_argument);
}

TEST_CASE("selberg_chowla_half at the class-number-one primes") {
  auto p11 = selberg_chowla_half(11);
  CHECK(std::abs(p11.lhs - p11.rhs) < 1e-9);
  CHECK(p11.bessel_terms <= 5);
  auto p19 = selberg_chowla_half(19);
  CHECK(std::abs(p19.lhs - p19.rhs) < 1e-9);
  // the divisor-count kernel closes the identity to machine precision
  auto p11d = selberg_chowla_half(11, false);
  CHECK(std::abs(p11d.lhs - p11d.rhs) < 1e-12);
  CHECK_THROWS_AS(selberg_chowla_half(12), std::invalid_argument);
}

TEST_CASE("madelung constant") {
  double m2 = madelung_m2();
  CHECK(std::abs(m2 - (-1.6155426267128247)) < 1e-9);
  CHECK(m2 < 0.0);
}
