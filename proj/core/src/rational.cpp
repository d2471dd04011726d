#include "absgame/rational.hpp"

#include <ostream>

namespace absgame {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, bool allow_sign, std::string_view whole) {
  std::string_view digits = s;
  bool negative = false;
  if (allow_sign && !digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (!is_digits(digits)) {
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  if (digits.size() > 1 && digits.front() == '0') {
    throw ParseError("leading zero in rational '" + std::string(whole) + "'");
  }
  Integer v(std::string(digits), 10);
  if (negative) {
    if (v == 0) throw ParseError("negative zero in rational '" + std::string(whole) + "'");
    v = -v;
  }
  return v;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, true, text));
  }
  Integer num = parse_integer(text.substr(0, slash), true, text);
  Integer den = parse_integer(text.substr(slash + 1), false, text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  if (r.num() != num || r.den() != den) {
    throw ParseError("non-canonical rational '" + std::string(text) + "'");
  }
  return r;
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational distance(const Rational& x, const Rational& y) { return (x - y).abs(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(base.reciprocal(), -exponent);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

long ceil_log(const Rational& target, const Integer& base) {
  if (base <= 1) throw std::domain_error("ceil_log needs base > 1");
  long e = 0;
  Rational power(1);
  const Rational b(base);
  while (power < target) {
    power *= b;
    ++e;
  }
  return e;
}

long ceil_log2(long x) {
  if (x < 1) throw std::domain_error("ceil_log2 needs x >= 1");
  long e = 0;
  long p = 1;
  while (p < x) {
    p *= 2;
    ++e;
  }
  return e;
}

}  // namespace absgame
