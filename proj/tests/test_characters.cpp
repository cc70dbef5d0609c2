#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "zetalab/characters.hpp"

using namespace zetalab;
using namespace zetalab::characters;

TEST_CASE("is_fundamental") {
  CHECK(is_fundamental(-4));
  CHECK(is_fundamental(-3));
  CHECK(is_fundamental(12));
  CHECK(is_fundamental(8));
  CHECK(is_fundamental(-8));
  CHECK(is_fundamental(5));
  CHECK(is_fundamental(21));
  CHECK(is_fundamental(1));
  CHECK_FALSE(is_fundamental(9));
  CHECK_FALSE(is_fundamental(0));
  CHECK_FALSE(is_fundamental(45));
  CHECK_FALSE(is_fundamental(-12));
  CHECK_FALSE(is_fundamental(7));
}

TEST_CASE("kronecker_symbol: pinned values") {
  for (std::int64_t d : {-3, -4, 5, 8, -8, 12, -23}) CHECK(kronecker_symbol(d, 1) == 1);
  CHECK(kronecker_symbol(-4, 3) == -1);
  CHECK(kronecker_symbol(5, 4) == 1);  // chi_k(k-1) = +1 for positive discriminants
  CHECK_THROWS_AS(kronecker_symbol(-4, 0), std::invalid_argument);
  CHECK_THROWS_AS(kronecker_symbol(6, 5), std::invalid_argument);  // 6 is not fundamental
}

TEST_CASE("kronecker_symbol agrees with the Legendre power criterion") {
  // for odd prime modulus p and D = +-p (fundamental), chi_D(n) must equal
  // the quadratic-residue character mod p on units
  for (std::int64_t p : {3, 7, 11, 19, 23}) {
    std::int64_t d = (p % 4 == 3) ? -p : p;
    for (std::int64_t n = 1; n < p; ++n) {
      // Euler criterion by repeated squaring
      std::int64_t e = (p - 1) / 2, base = n % p, acc = 1;
      while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
      }
      int legendre = (acc == 1) ? 1 : -1;
      CHECK(kronecker_symbol(d, n) == legendre);
    }
  }
}

TEST_CASE("kronecker_symbol agrees with the textbook Jacobi oracle on odd n") {
  for (std::int64_t d : {-3, -4, 5, 8, -8, 12, -23, -7, 13}) {
    for (std::int64_t n = 1; n <= 99; n += 2) {
      CHECK(kronecker_symbol(d, n) == oracles::slow_jacobi(d, n));
    }
  }
}

TEST_CASE("character tables: pinned small tables") {
  auto t4 = character_table(-4);
  CHECK(t4.values == std::vector<int>{1, 0, -1, 0});
  auto t3 = character_table(-3);
  CHECK(t3.values == std::vector<int>{1, -1, 0});
  auto t5 = character_table(5);
  CHECK(t5.values == std::vector<int>{1, -1, -1, 1, 0});
  CHECK(t4.odd_parity);
  CHECK_FALSE(t5.odd_parity);
}

TEST_CASE("character tables: invariants for all fundamental |D| <= 200") {
  int tested = 0;
  for (std::int64_t d = -200; d <= 200; ++d) {
    if (d == 0 || d == 1 || !is_fundamental(d)) continue;
    auto t = character_table(d);  // construction verifies zero-sum etc.
    ++tested;
    long sum = 0;
    for (int v : t.values) sum += v;
    CHECK(sum == 0);
    // periodicity
    for (std::int64_t n = 1; n <= 40; n += 7) CHECK(t(n + t.modulus) == t(n));
    // parity split
    CHECK(t(t.modulus - 1) == (d > 0 ? 1 : -1));
    // complete multiplicativity on a sampled grid
    for (std::int64_t m = 2; m <= 12; m += 3)
      for (std::int64_t n = 3; n <= 25; n += 5) CHECK(t(m * n) == t(m) * t(n));
  }
  CHECK(tested > 50);
}

TEST_CASE("class numbers of small imaginary quadratic fields") {
  CHECK(class_number(-3).h == 1);
  CHECK(class_number(-4).h == 1);
  CHECK(class_number(-7).h == 1);
  CHECK(class_number(-8).h == 1);
  CHECK(class_number(-11).h == 1);
  CHECK(class_number(-15).h == 2);
  CHECK(class_number(-20).h == 2);
  CHECK(class_number(-23).h == 3);
  CHECK(class_number(-163).h == 1);
  CHECK(class_number(-4).unit_count == 4);
  CHECK(class_number(-3).unit_count == 6);
  CHECK(class_number(-23).unit_count == 2);
  CHECK(class_number(-23).rounding_distance < 0.01);
  CHECK_THROWS_AS(class_number(5), std::invalid_argument);
  CHECK_THROWS_AS(class_number(-12), std::invalid_argument);
}
