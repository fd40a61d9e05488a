#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace altseq {

/// Exact rational arithmetic over signed 128-bit integers.
///
/// 128 bits cover every exact computation in this project (word weights up
/// to ~24^16, permutation tallies up to 10!*10^2, transfer-matrix moments
/// at denominator 2^40). Operations that would exceed the range throw
/// std::overflow_error instead of wrapping silently.
class Rational {
 public:
  using Int = __int128;

  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(Int num, Int den);

  /// Parses "a/b", an integer "a", or a plain decimal "a.bcd" (no exponent).
  static Rational from_string(std::string_view text);

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const;

  /// Canonical text form: "p/q" for proper fractions, "p" for integers.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  void normalize();

  Int num_ = 0;
  Int den_ = 1;
};

/// base^e by repeated squaring, exact.
Rational pow(Rational base, std::uint64_t exponent);

std::string i128_to_string(__int128 value);

}  // namespace altseq
