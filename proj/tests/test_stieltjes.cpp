#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "zetalab/special.hpp"
#include "zetalab/stieltjes.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;
using namespace zetalab::stieltjes;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gamma_0 bridge: gamma_0(a) = -psi(a)") {
  for (int i = 1; i <= 8; ++i) {
    double a = i / 8.0;
    auto g = stieltjes_gamma(0, a);
    CHECK(std::abs(g.value + special::digamma(a)) < 1e-10);
  }
}

TEST_CASE("stieltjes_gamma: gamma_1 and domain errors") {
  auto g1 = stieltjes_gamma(1, 1.0);
  CHECK(std::abs(g1.value - (-0.0728158454836767)) < 1e-12);
  CHECK(g1.err_estimate >= 0.0);
  CHECK_THROWS_AS(stieltjes_gamma(-1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(stieltjes_gamma(kMaxGammaIndex + 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(stieltjes_gamma(0, 0.0), std::invalid_argument);
}

TEST_CASE("stieltjes_oracle: classical values") {
  CHECK(std::abs(stieltjes_oracle(0, 1.0) - oracles::euler_gamma()) < 1e-11);
  CHECK(std::abs(stieltjes_oracle(1, 1.0) - (-0.0728158454836767)) < 1e-10);
  // digamma duplication: gamma_0(1/2) = -psi(1/2) = gamma + 2 ln 2
  CHECK(std::abs(stieltjes_oracle(0, 0.5) - (oracles::euler_gamma() + 2.0 * std::log(2.0))) <
        1e-11);
  CHECK_THROWS_AS(stieltjes_oracle(13, 1.0), std::invalid_argument);
}

TEST_CASE("integral representation agrees with the limit-formula oracle") {
  for (int k = 0; k <= 8; ++k) {
    for (double a : {0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.75, 1.0}) {
      double rep = stieltjes_gamma(k, a).value;
      double orc = stieltjes_oracle(k, a);
      CHECK(std::abs(rep - orc) < 1e-8);
    }
  }
}

TEST_CASE("Prop 6(a) value frozen from the exponential series") {
  auto ga = stieltjes_gamma(1, 0.75);
  auto gb = stieltjes_gamma(1, 0.25);
  CHECK(std::abs((ga.value - gb.value) - 5.126777447794854) < 1e-9);
}

TEST_CASE("summatory_eval: the three named examples") {
  SummatorySpec eq14a;
  eq14a.x = -1.0;
  eq14a.n_max = 30;
  eq14a.terms.emplace_back(Rational(1), Rational(1, 3));
  eq14a.terms.emplace_back(Rational(-1), Rational(2, 3));
  auto r = summatory_eval(eq14a);
  CHECK(std::abs(r.closed_form - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(r.partial_sums.back() - 1.0 / 3.0) < 1e-8);

  SummatorySpec eq14b;
  eq14b.x = 1.0;
  eq14b.n_max = 40;
  eq14b.terms.emplace_back(Rational(1), Rational(1, 4));
  eq14b.terms.emplace_back(Rational(-1), Rational(3, 4));
  auto rb = summatory_eval(eq14b);
  CHECK(std::abs(rb.closed_form - 16.0 * oracles::catalan()) < 1e-10);

  SummatorySpec x2;
  x2.x = 2.0;
  x2.n_max = 40;
  x2.terms.emplace_back(Rational(1), Rational(1, 3));
  x2.terms.emplace_back(Rational(-1), Rational(2, 3));
  auto rc = summatory_eval(x2);
  CHECK(std::abs(rc.closed_form - 4.0 * std::pow(kPi, 3) / std::pow(3.0, 1.5)) < 1e-10);
  CHECK(std::abs(rc.partial_sums.back() - rc.closed_form) < 1e-8);
}

TEST_CASE("Laurent consistency: partial sums against the closed form") {
  for (double x : {-1.0, -0.5, 0.5, 1.0, 2.0, 3.0}) {
    for (auto [p, q] : {std::pair{1, 4}, {1, 3}, {1, 2}, {2, 3}, {3, 4}, {1, 1}}) {
      SummatorySpec spec;
      spec.x = x;
      spec.n_max = 40;
      spec.terms.emplace_back(Rational(1), Rational(p, q));
      auto r = summatory_eval(spec);
      double target = zeta::hurwitz_zeta(1.0 + x, static_cast<double>(p) / q) - 1.0 / x;
      CHECK(std::abs(r.closed_form - target) < 1e-11);
      CHECK(std::abs(r.partial_sums.back() - target) < 1e-7);
    }
  }
}

TEST_CASE("summatory pole handling at x = 0") {
  SummatorySpec bad;
  bad.x = 0.0;
  bad.terms.emplace_back(Rational(1), Rational(1, 3));
  CHECK_THROWS_AS(summatory_eval(bad), std::invalid_argument);

  SummatorySpec ok;
  ok.x = 0.0;
  ok.n_max = 10;
  ok.terms.emplace_back(Rational(1), Rational(1, 3));
  ok.terms.emplace_back(Rational(-1), Rational(2, 3));
  auto r = summatory_eval(ok);
  double expected = special::digamma(2.0 / 3.0) - special::digamma(1.0 / 3.0);
  CHECK(std::abs(r.closed_form - expected) < 1e-10);
  // only n = 0 survives: constant profile
  for (double s : r.partial_sums) CHECK(std::abs(s - r.partial_sums[0]) < 1e-15);
  CHECK(std::abs(r.partial_sums[0] - expected) < 1e-9);
}

TEST_CASE("convergence_profile") {
  SummatorySpec spec;
  spec.x = -1.0;
  spec.n_max = 30;
  spec.terms.emplace_back(Rational(1), Rational(1, 3));
  spec.terms.emplace_back(Rational(-1), Rational(2, 3));
  auto rows = convergence_profile(spec);
  REQUIRE(rows.size() == 31);
  CHECK(rows[30].abs_diff < 1e-8);

  SummatorySpec empty;
  empty.n_max = 5;
  auto zero_rows = convergence_profile(empty);
  REQUIRE(zero_rows.size() == 6);
  for (const auto& row : zero_rows) {
    CHECK(row.partial_sum == 0.0);
    CHECK(row.abs_diff == 0.0);
  }
}

TEST_CASE("laurent_coefficients carries the gamma_0 invariant") {
  auto lc = laurent_coefficients(Rational(1, 3), 4);
  REQUIRE(lc.gammas.size() == 5);
  auto [k0, v0, e0] = lc.gammas[0];
  CHECK(k0 == 0);
  CHECK(std::abs(v0 + special::digamma(1.0 / 3.0)) < 1e-10);
}
