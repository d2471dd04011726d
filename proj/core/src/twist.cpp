#include "absgame/twist.hpp"

#include <stdexcept>

namespace absgame {

namespace {

bool in_unit(const Rational& x) { return Rational(0) <= x && x <= Rational(1); }

}  // namespace

TwistSequence TwistSequence::constant(const Rational& v) {
  if (!in_unit(v)) throw std::invalid_argument("constant twist value must lie in [0,1]");
  TwistSequence t;
  t.family_ = Family::Constant;
  t.value_ = v;
  t.lipschitz_ = Rational(0);
  return t;
}

TwistSequence TwistSequence::identity() {
  TwistSequence t;
  t.family_ = Family::Identity;
  t.lipschitz_ = Rational(1);
  return t;
}

TwistSequence TwistSequence::affine(const Rational& slope) {
  if (!in_unit(slope)) throw std::invalid_argument("affine twist slope L must satisfy 0 <= L <= 1");
  TwistSequence t;
  t.family_ = Family::Affine;
  t.value_ = slope;
  t.lipschitz_ = slope;
  return t;
}

TwistSequence TwistSequence::custom(std::vector<std::pair<Rational, Rational>> rows) {
  if (rows.empty()) throw std::invalid_argument("custom twist table is empty");
  TwistSequence t;
  t.family_ = Family::Custom;
  t.lipschitz_ = Rational(0);
  for (const auto& [a, b] : rows) {
    if (!in_unit(b) || !in_unit(a + b)) {
      throw std::invalid_argument("custom twist row " + a.str() + "*x+" + b.str() + " leaves [0,1]");
    }
    t.lipschitz_ = max(t.lipschitz_, a.abs());
  }
  t.rows_ = std::move(rows);
  return t;
}

TwistSequence TwistSequence::approximated(std::string name, Approximator fn, const Rational& eps,
                                          const Rational& lipschitz) {
  if (eps.sign() < 0) throw std::invalid_argument("approximation error must be >= 0");
  if (lipschitz.sign() < 0) throw std::invalid_argument("lipschitz bound must be >= 0");
  TwistSequence t;
  t.family_ = Family::Approximated;
  t.approx_ = std::move(fn);
  t.eps_ = eps;
  t.lipschitz_ = lipschitz;
  t.name_ = std::move(name);
  return t;
}

TwistSequence TwistSequence::parse(std::string_view text) {
  if (text == "identity") return identity();
  if (text.substr(0, 6) == "const:") return constant(Rational::parse(text.substr(6)));
  if (text.substr(0, 7) == "affine:") {
    const Rational L = Rational::parse(text.substr(7));
    if (L > Rational(1) || L.sign() < 0) {
      throw std::invalid_argument("affine:" + L.str() + " is not equicontinuous into [0,1]; need 0 <= L <= 1");
    }
    return affine(L);
  }
  throw ParseError("unknown twist '" + std::string(text) + "' (expected const:<p/q>, identity or affine:<L>)");
}

Rational TwistSequence::eval(long n, const Rational& x) const {
  switch (family_) {
    case Family::Constant:
      return value_;
    case Family::Identity:
      return x;
    case Family::Affine: {
      const Rational offset = min(Rational(1) - value_, Rational(Integer(1), Integer(n + 4)));
      return value_ * x + offset;
    }
    case Family::Custom: {
      const auto& [a, b] = rows_[std::min<std::size_t>(static_cast<std::size_t>(n), rows_.size() - 1)];
      return a * x + b;
    }
    case Family::Approximated:
      return min(Rational(1), max(Rational(0), approx_(n, x, eps_)));
  }
  return value_;
}

Rational TwistSequence::modulus(const Rational& eps) const { return lipschitz_ * eps; }

Rational TwistSequence::inverse_modulus(const Rational& bound) const {
  if (lipschitz_.is_zero()) return Rational(1);
  return bound / lipschitz_;
}

std::string TwistSequence::str() const {
  switch (family_) {
    case Family::Constant:
      return "const:" + value_.str();
    case Family::Identity:
      return "identity";
    case Family::Affine:
      return "affine:" + value_.str();
    case Family::Custom:
      return "custom:" + std::to_string(rows_.size());
    case Family::Approximated:
      return "approx:" + name_;
  }
  return "?";
}

}  // namespace absgame
