#include "altseq/rational.hpp"

#include <cctype>

namespace altseq {

namespace {

using Int = Rational::Int;

[[noreturn]] void overflow() { throw std::overflow_error("rational overflow (128-bit)"); }

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

Int abs128(Int v) { return v < 0 ? -v : v; }

Int gcd128(Int a, Int b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(Int num, Int den) : num_(num), den_(den) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = gcd128(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  // Cross-multiply on gcd-reduced denominators to delay overflow.
  Int g = gcd128(den_, o.den_);
  Int lhs = checked_mul(num_, o.den_ / g);
  Int rhs = checked_mul(o.num_, den_ / g);
  num_ = checked_add(lhs, rhs);
  den_ = checked_mul(den_ / g, o.den_);
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  Int g1 = gcd128(num_, o.den_);
  Int g2 = gcd128(o.num_, den_);
  num_ = checked_mul(num_ / g1, o.num_ / g2);
  den_ = checked_mul(den_ / g2, o.den_ / g1);
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  return *this *= Rational(o.den_, o.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  // Denominators are positive after normalization.
  return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  std::string s = i128_to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += i128_to_string(den_);
  }
  return s;
}

Rational Rational::from_string(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("cannot parse rational: '" + std::string(text) + "'");
  };
  size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = (text[pos] == '-');
    ++pos;
  }
  if (pos >= text.size()) return fail();

  Int num = 0;
  Int den = 1;
  bool any_digit = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    num = checked_add(checked_mul(num, 10), text[pos] - '0');
    any_digit = true;
    ++pos;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      num = checked_add(checked_mul(num, 10), text[pos] - '0');
      den = checked_mul(den, 10);
      any_digit = true;
      ++pos;
    }
  } else if (pos < text.size() && text[pos] == '/') {
    ++pos;
    Int d = 0;
    bool denom_digit = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      d = checked_add(checked_mul(d, 10), text[pos] - '0');
      denom_digit = true;
      ++pos;
    }
    if (!denom_digit || d == 0) return fail();
    den = d;
  }
  if (!any_digit || pos != text.size()) return fail();
  return Rational(negative ? -num : num, den);
}

Rational pow(Rational base, std::uint64_t exponent) {
  Rational result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string i128_to_string(__int128 value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  unsigned __int128 v = negative ? -static_cast<unsigned __int128>(value)
                                 : static_cast<unsigned __int128>(value);
  char buf[48];
  int i = 48;
  while (v > 0) {
    buf[--i] = static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  std::string s;
  if (negative) s += '-';
  s.append(buf + i, 48 - i);
  return s;
}

}  // namespace altseq
