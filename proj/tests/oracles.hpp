#pragma once

// Test-side oracles, independent of the library implementations they check.

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracles {

// Euler's constant from H_M - ln M with Euler-Maclaurin corrections.
inline double euler_gamma(std::int64_t m = 4000) {
  long double h = 0.0L;
  for (std::int64_t j = 1; j <= m; ++j) h += 1.0L / j;
  long double x = static_cast<long double>(m);
  long double corr = 1.0L / (2 * x) - 1.0L / (12 * x * x) + 1.0L / (120 * x * x * x * x) -
                     1.0L / (252 * x * x * x * x * x * x);
  return static_cast<double>(h - std::log(x) - corr);
}

// Catalan constant by Cohen-Rodriguez Villegas-Zagier acceleration of
// sum (-1)^k / (2k+1)^2 (local copy, independent of the library's).
inline double catalan(int n = 40) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0, c = -d, s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c / ((2.0 * k + 1.0) * (2.0 * k + 1.0));
    b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

// Plain (non-segmented) sieve.
inline std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 3) return out;
  std::vector<bool> comp(limit, false);
  for (std::uint64_t i = 2; i < limit; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j < limit; j += i) comp[j] = true;
  }
  return out;
}

// Textbook Jacobi symbol for odd n > 0.
inline int slow_jacobi(std::int64_t a, std::int64_t n) {
  a %= n;
  if (a < 0) a += n;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      if (n % 8 == 3 || n % 8 == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

// Smallest y >= 1 with D y^2 +- 4 a perfect square; returns (x, y, norm).
struct PellBrute {
  std::int64_t x = 0, y = 0;
  int norm = 0;
};
inline PellBrute pell_brute(std::int64_t d, std::int64_t y_limit = 2000000) {
  auto issq = [](std::int64_t v, std::int64_t* root) {
    if (v < 0) return false;
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    for (std::int64_t c = std::max<std::int64_t>(0, r - 1); c <= r + 1; ++c)
      if (c * c == v) {
        *root = c;
        return true;
      }
    return false;
  };
  for (std::int64_t y = 1; y <= y_limit; ++y) {
    std::int64_t root = 0;
    if (issq(d * y * y - 4, &root)) return {root, y, -1};
    if (issq(d * y * y + 4, &root)) return {root, y, +1};
  }
  return {};
}

// sigma_1 over explicit divisor enumeration (for small n).
inline std::int64_t sigma1(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

}  // namespace oracles
