#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "error.hpp"

namespace ltop {

// Exact rational on int64, normalized with positive denominator. Used for
// generator length schedules and for length identities that must hold
// exactly; the graph representation itself carries doubles.
class Rational {
public:
  Rational() = default;
  Rational(long long num) : n_(num), d_(1) {}
  Rational(long long num, long long den) : n_(num), d_(den) { normalize(); }

  static Rational from_double(double x) {
    // Exact only for dyadic doubles of moderate size, which is all the
    // library produces; reject anything that cannot be represented.
    if (x == 0.0) return Rational(0);
    long long den = 1;
    double y = x;
    int guard = 0;
    while (y != static_cast<double>(static_cast<long long>(y))) {
      y *= 2;
      den <<= 1;
      if (++guard > 62) fail(errc::invalid_argument, "value is not an exactly representable dyadic rational");
    }
    return Rational(static_cast<long long>(y), den);
  }

  // Parses "p/q", an integer, or a plain decimal like "1.5" (exact).
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash != std::string::npos) {
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
      }
      auto dot = s.find('.');
      if (dot == std::string::npos) return Rational(std::stoll(s));
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      long long den = 1;
      for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
      return Rational(std::stoll(digits), den);
    } catch (const std::exception&) {
      fail(errc::parse, "cannot parse rational: " + s);
    }
  }

  long long num() const { return n_; }
  long long den() const { return d_; }
  double to_double() const { return static_cast<double>(n_) / static_cast<double>(d_); }

  std::string str() const {
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    long long g = std::gcd(a.d_, b.d_);
    return Rational(a.n_ * (b.d_ / g) + b.n_ * (a.d_ / g), a.d_ / g * b.d_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.n_, b.d_); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    long long g1 = std::gcd(std::abs(a.n_), b.d_), g2 = std::gcd(std::abs(b.n_), a.d_);
    return Rational((a.n_ / g1) * (b.n_ / g2), (a.d_ / g2) * (b.d_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.n_ == 0) fail(errc::invalid_argument, "rational division by zero");
    return a * Rational(b.d_, b.n_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.n_ == b.n_ && a.d_ == b.d_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.n_) * b.d_ < static_cast<__int128>(b.n_) * a.d_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

  // 2^-k as an exact rational, k in [0, 62].
  static Rational pow2neg(int k) {
    if (k < 0 || k > 62) fail(errc::invalid_argument, "pow2neg exponent out of range");
    return Rational(1, 1LL << k);
  }

private:
  void normalize() {
    if (d_ == 0) fail(errc::invalid_argument, "rational with zero denominator");
    if (d_ < 0) { n_ = -n_; d_ = -d_; }
    long long g = std::gcd(std::abs(n_), d_);
    if (g > 1) { n_ /= g; d_ /= g; }
  }

  long long n_ = 0;
  long long d_ = 1;
};

}  // namespace ltop
