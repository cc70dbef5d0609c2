#pragma once

// Truncated Euler products over primes in residue classes, with log-space
// accumulation and a rigorous (crude) tail majorant.

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

#include "zetalab/lfunctions.hpp"
#include "zetalab/numerics.hpp"

namespace zetalab::primeprod {

enum class FactorSign {
  minus,  // factor (p^s - 1) / (p^s + 1)
  plus,   // factor (p^s + 1) / (p^s - 1)
};

struct ResidueProductSpec {
  std::int64_t modulus = 0;
  std::map<std::int64_t, FactorSign> pattern;  // residue -> orientation
  double exponent = 0.0;                       // s > 1
  std::uint64_t limit = 10000000;              // sieve bound
};

struct ResidueProductResult {
  double value = 0.0;
  double log_tail_bound = 0.0;
  std::uint64_t primes_used = 0;
};

inline void validate(const ResidueProductSpec& spec) {
  if (spec.modulus < 2) throw std::invalid_argument("residue_product: modulus must be >= 2");
  if (!(spec.exponent > 1.0)) throw std::invalid_argument("residue_product: need s > 1");
  if (spec.limit < 100) throw std::invalid_argument("residue_product: limit must be >= 100");
  if (spec.pattern.empty()) throw std::invalid_argument("residue_product: empty residue pattern");
  for (const auto& [r, sign] : spec.pattern) {
    if (r < 0 || r >= spec.modulus) throw std::invalid_argument("residue_product: residue out of range");
    if (std::gcd(r, spec.modulus) != 1)
      throw std::invalid_argument("residue_product: residues must be coprime to the modulus");
  }
}

// ln((p^s - 1)/(p^s + 1)) = ln(1 - p^-s) - ln(1 + p^-s), via log1p so the
// large-p factors keep full relative accuracy.
inline double log_factor(double p, double s, FactorSign sign) {
  double ps = std::pow(p, -s);
  double v = std::log1p(-ps) - std::log1p(ps);
  return sign == FactorSign::minus ? v : -v;
}

inline ResidueProductResult residue_product(const ResidueProductSpec& spec) {
  validate(spec);
  numerics::CompensatedAccumulator log_acc;
  std::uint64_t used = 0;
  numerics::sieve_primes(spec.limit, numerics::kDefaultSegmentSize,
                         [&](const numerics::SieveSegment& seg) {
                           for (std::uint64_t p : seg.primes) {
                             auto it = spec.pattern.find(static_cast<std::int64_t>(p % spec.modulus));
                             if (it == spec.pattern.end()) continue;
                             log_acc.add(log_factor(static_cast<double>(p), spec.exponent, it->second));
                             ++used;
                           }
                         });
  ResidueProductResult out;
  out.primes_used = used;
  double phi = 0.0;
  for (std::int64_t r = 1; r < spec.modulus; ++r)
    if (std::gcd(r, spec.modulus) == 1) phi += 1.0;
  double density = static_cast<double>(spec.pattern.size()) / phi;
  double lt = static_cast<double>(spec.limit);
  out.log_tail_bound =
      2.0 * std::pow(lt, 1.0 - spec.exponent) / ((spec.exponent - 1.0) * std::log(lt)) * density;
  out.value = std::exp(log_acc.value());
  return out;
}

// The residue-class product implied by the L/zeta Euler-product arrangement:
//   prod_{chi(p) = -1} (p^s - 1)/(p^s + 1)
//     = L_D(s) / ( zeta(s) * prod_{p | |D|} (1 - p^{-s}) ).
inline double euler_product_ratio(std::int64_t d, double s, std::uint64_t /*limit*/ = 0) {
  if (!(s > 1.0)) throw std::invalid_argument("euler_product_ratio: need s > 1");
  double l = lfunctions::l_value(d, s).value;
  double z = zeta::hurwitz_zeta(s, 1.0);
  double local = 1.0;
  std::int64_t k = std::abs(d);
  for (std::int64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    local *= 1.0 - std::pow(static_cast<double>(p), -s);
    while (k % p == 0) k /= p;
  }
  if (k > 1) local *= 1.0 - std::pow(static_cast<double>(k), -s);
  return l / (z * local);
}

}  // namespace zetalab::primeprod
