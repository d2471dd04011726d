#pragma once

#include <string>

#include "absgame/rational.hpp"

namespace absgame {

/// a + b*sqrt(5) with rational a, b; comparisons are exact.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT
  QuadraticSurd(const Rational& a) : a_(a), b_(0) {}                            // NOLINT

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  int sign() const;
  QuadraticSurd conjugate() const { return {a_, -b_}; }
  /// Rational bounds within 10^-digits of the true value (lower <= value <= upper).
  Rational lower_bound(long digits) const;
  Rational upper_bound(long digits) const;
  std::string str() const;

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    return {x.a_ * y.a_ + Rational(5) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() <= 0; }
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  Rational a_;
  Rational b_;
};

/// psi = ((1 + sqrt 5)/2)^2 = (3 + sqrt 5)/2.
QuadraticSurd psi();
/// psi^k for any integer k, via Lucas and Fibonacci numbers.
QuadraticSurd psi_pow(long k);

/// Bounds on sqrt(5) with error below 10^-digits.
Rational sqrt5_lower(long digits);
Rational sqrt5_upper(long digits);

}  // namespace absgame
