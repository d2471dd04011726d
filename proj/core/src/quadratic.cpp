#include "absgame/quadratic.hpp"

#include "absgame/dynamics.hpp"

namespace absgame {

namespace {

Integer pow10(long digits) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return p;
}

Integer lucas(long n) {
  // L_n = F_{n-1} + F_{n+1}
  return fibonacci(n - 1) + fibonacci(n + 1);
}

}  // namespace

int QuadraticSurd::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with 5 b^2
  const Rational a2 = a_ * a_;
  const Rational b2 = Rational(5) * b_ * b_;
  if (a2 == b2) return 0;
  return a2 > b2 ? sa : sb;
}

Rational sqrt5_lower(long digits) {
  const Integer scale = pow10(digits);
  Integer n = 5 * scale * scale;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return Rational(s, scale);
}

Rational sqrt5_upper(long digits) {
  const Integer scale = pow10(digits);
  Integer n = 5 * scale * scale;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  if (s * s != n) s += 1;
  return Rational(s, scale);
}

Rational QuadraticSurd::lower_bound(long digits) const {
  // b*sqrt5 is bounded below by b*lower when b >= 0, by b*upper otherwise
  const long d = digits + static_cast<long>(mpz_sizeinbase(b_.num().get_mpz_t(), 10)) + 1;
  const Rational s = b_.sign() >= 0 ? sqrt5_lower(d) : sqrt5_upper(d);
  return a_ + b_ * s;
}

Rational QuadraticSurd::upper_bound(long digits) const {
  const long d = digits + static_cast<long>(mpz_sizeinbase(b_.num().get_mpz_t(), 10)) + 1;
  const Rational s = b_.sign() >= 0 ? sqrt5_upper(d) : sqrt5_lower(d);
  return a_ + b_ * s;
}

std::string QuadraticSurd::str() const { return "(" + a_.str() + ")+(" + b_.str() + ")*sqrt5"; }

QuadraticSurd psi() { return {Rational(3, 2), Rational(1, 2)}; }

QuadraticSurd psi_pow(long k) {
  // phi^m = (L_m + F_m sqrt5)/2, so psi^k = phi^{2k}; phi^{-1} = -conj(phi)
  if (k == 0) return Rational(1);
  const long m = 2 * (k < 0 ? -k : k);
  QuadraticSurd v{Rational(lucas(m), 2), Rational(fibonacci(m), 2)};
  if (k < 0) v = v.conjugate();  // phi^{-m} = conj(phi^m) for even m
  return v;
}

}  // namespace absgame
