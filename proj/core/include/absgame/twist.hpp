#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absgame/rational.hpp"

namespace absgame {

/// An equicontinuous sequence f_0, f_1, ... of maps [0,1] -> [0,1].
class TwistSequence {
 public:
  enum class Family { Constant, Identity, Affine, Custom, Approximated };

  /// Returns a rational within `eps` of the exact value f_n(x).
  using Approximator = std::function<Rational(long n, const Rational& x, const Rational& eps)>;

  static TwistSequence constant(const Rational& v);
  static TwistSequence identity();
  /// f_n(x) = L*x + min(1 - L, 1/(n+4)), 0 <= L <= 1.
  static TwistSequence affine(const Rational& slope);
  /// f_n(x) = a_n*x + b_n from the table; indices past the end reuse the last row.
  static TwistSequence custom(std::vector<std::pair<Rational, Rational>> rows);
  /// Irrational-valued family evaluated to within eps; `lipschitz` bounds every f_n.
  static TwistSequence approximated(std::string name, Approximator fn, const Rational& eps, const Rational& lipschitz);

  /// Accepts "const:<p/q>", "identity" or "affine:<L>".
  static TwistSequence parse(std::string_view text);

  Family family() const { return family_; }
  Rational eval(long n, const Rational& x) const;
  /// Bound on |f_n(x) - f_n(y)| valid for every n whenever |x - y| < eps.
  Rational modulus(const Rational& eps) const;
  /// Largest eps with modulus(eps) <= bound; returns 1 when the family is constant.
  Rational inverse_modulus(const Rational& bound) const;
  const Rational& lipschitz() const { return lipschitz_; }
  /// Error of eval against the exact value (0 for rational families).
  const Rational& approximation_error() const { return eps_; }
  bool is_constant() const { return family_ == Family::Constant; }
  bool is_constant_zero() const { return is_constant() && value_.is_zero(); }
  std::string str() const;

 private:
  Family family_ = Family::Constant;
  Rational value_;
  Rational lipschitz_;
  Rational eps_;
  std::vector<std::pair<Rational, Rational>> rows_;
  Approximator approx_;
  std::string name_;
};

}  // namespace absgame
