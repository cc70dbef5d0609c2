#pragma once

// Shared plumbing: error types, checked 128-bit integer helpers, and an
// exact rational type used for Hurwitz shifts and Bernoulli numbers.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace zetalab {

using int128 = __int128;

class overflow_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("int128 add overflow");
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("int128 mul overflow");
  return r;
}

inline int128 int128_abs(int128 a) { return a < 0 ? -a : a; }

inline int128 int128_gcd(int128 a, int128 b) {
  a = int128_abs(a);
  b = int128_abs(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline double int128_to_double(int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  double d = static_cast<double>(static_cast<std::uint64_t>(u >> 64)) * 18446744073709551616.0 +
             static_cast<double>(static_cast<std::uint64_t>(u));
  return neg ? -d : d;
}

inline std::string int128_to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

// Exact fraction, gcd-reduced, positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int128 n) : num_(n), den_(1) {}  // NOLINT: implicit from integers is wanted
  Rational(int128 n, int128 d) : num_(n), den_(d) { normalize(); }

  int128 num() const { return num_; }
  int128 den() const { return den_; }

  double to_double() const { return int128_to_double(num_) / int128_to_double(den_); }

  Rational operator-() const { return Rational(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    int128 g = int128_gcd(a.den_, b.den_);
    int128 lhs = checked_mul(a.num_, b.den_ / g);
    int128 rhs = checked_mul(b.num_, a.den_ / g);
    return Rational(checked_add(lhs, rhs), checked_mul(a.den_, b.den_ / g));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    int128 g1 = int128_gcd(int128_abs(a.num_), b.den_);
    int128 g2 = int128_gcd(int128_abs(b.num_), a.den_);
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2),
                    checked_mul(a.den_ / g2, b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return a * Rational(b.den_, b.num_);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const {
    if (den_ == 1) return int128_to_string(num_);
    return int128_to_string(num_) + "/" + int128_to_string(den_);
  }

  // Strict "p/q" (or "p") with q > 0 after reduction.
  static Rational parse(const std::string& text);

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    int128 g = int128_gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  int128 num_;
  int128 den_;
};

inline Rational Rational::parse(const std::string& text) {
  auto parse_int = [](const std::string& s) -> int128 {
    if (s.empty()) throw std::invalid_argument("empty integer in rational");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad integer: " + s);
    int128 v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer: " + s);
      v = checked_add(checked_mul(v, 10), s[i] - '0');
    }
    return neg ? -v : v;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  int128 p = parse_int(text.substr(0, slash));
  int128 q = parse_int(text.substr(slash + 1));
  if (q <= 0) throw std::invalid_argument("rational denominator must be positive: " + text);
  return Rational(p, q);
}

}  // namespace zetalab
