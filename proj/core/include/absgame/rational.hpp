#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace absgame {

using Integer = mpz_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact signed rational, always held in canonical form
/// (positive denominator, gcd(|num|, den) = 1).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class value);

  /// Parses "p/q" or "p". Rejects non-canonical input such as "2/4" or "1/-3".
  static Rational parse(std::string_view text);

  /// Serializes as "p/q"; integers come out as "p/1".
  std::string str() const;

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Integer floor() const;
  Integer ceil() const;
  /// x - floor(x), in [0, 1).
  Rational frac() const;
  Rational abs() const;
  Rational reciprocal() const;
  double to_double() const { return value_.get_d(); }
  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// |x - y|.
Rational distance(const Rational& x, const Rational& y);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// base^exponent for any integer exponent (base must be nonzero if exponent < 0).
Rational pow(const Rational& base, long exponent);

/// Smallest e >= 0 with base^e >= target (base > 1).
long ceil_log(const Rational& target, const Integer& base);

/// ceil(log2(x)) for x >= 1.
long ceil_log2(long x);

}  // namespace absgame
