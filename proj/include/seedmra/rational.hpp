#pragma once

// Exact arithmetic for lattice geometry.
//
// All segment endpoints and lattice shifts live on rational multiples of the
// cell width a = 2*sqrt(pi), and the phases that appear in cell integrals are
//
//     kappa * s  =  2*pi * (rational) + (double remainder)
//
// because a^2 = 4*pi turns products of half-cell frequencies and rational
// positions into rational numbers of turns.  Carrying the rational part
// separately and reducing it mod 1 before calling sin/cos makes the Kronecker
// deltas of the coefficient tables exact instead of O(n * eps): sin at a
// whole, half or quarter turn is looked up, not computed.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace seedmra {

struct Rational {
  // Invariant: den > 0, gcd(num, den) == 1.
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return den == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::invalid_argument("rational division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  Rational operator-() const {
    Rational r;
    r.num = -num;
    r.den = den;
    return r;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  static Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
  static Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

  // Parses "p", "-p", "p/q".  Used for JSON endpoints given in units of a.
  static Rational parse(const std::string& text);
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational '" + text + "'");
  }
}

// angle = 2*pi*turns + rad
struct SplitAngle {
  Rational turns;
  double rad = 0.0;
};

namespace detail {

// turns mod 1, reduced into [-1/2, 1/2).
inline Rational reduce_turns(const Rational& t) {
  std::int64_t n = t.num % t.den;
  if (n < 0) n += t.den;          // now in [0, den)
  if (2 * n >= t.den) n -= t.den; // now in [-den/2, den/2)
  Rational r;
  r.num = n;
  r.den = t.den;
  r.normalize();
  return r;
}

}  // namespace detail

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// e^{i * angle}; quarter turns are exact when there is no double remainder.
inline std::complex<double> cis(const SplitAngle& a) {
  const Rational t = detail::reduce_turns(a.turns);
  if (a.rad == 0.0) {
    if (t.num == 0) return {1.0, 0.0};
    if (t.den == 2) return {-1.0, 0.0};            // t == -1/2
    if (t.den == 4) return {0.0, t.num > 0 ? 1.0 : -1.0};  // t == +-1/4
  }
  const double th = kTwoPi * t.to_double() + a.rad;
  return {std::cos(th), std::sin(th)};
}

// sin(angle) with the same exact quarter-turn handling.
inline double sin_angle(const SplitAngle& a) {
  const Rational t = detail::reduce_turns(a.turns);
  if (a.rad == 0.0) {
    if (t.num == 0 || t.den == 2) return 0.0;
    if (t.den == 4) return t.num > 0 ? 1.0 : -1.0;
  }
  return std::sin(kTwoPi * t.to_double() + a.rad);
}

// The unreduced magnitude, for sinc denominators.
inline double angle_value(const SplitAngle& a) {
  return kTwoPi * a.turns.to_double() + a.rad;
}

// sin(angle)/angle, with the removable singularity filled in.
inline double sinc_angle(const SplitAngle& a) {
  const double x = angle_value(a);
  if (std::fabs(x) < 1e-9) return 1.0 - x * x / 6.0;
  return sin_angle(a) / x;
}

}  // namespace seedmra
