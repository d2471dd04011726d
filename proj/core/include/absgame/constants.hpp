#pragma once

#include <stdexcept>
#include <string>

#include "absgame/dynamics.hpp"
#include "absgame/quadratic.hpp"
#include "absgame/rational.hpp"

namespace absgame {

class InfeasibleConstants : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StrategyConstants {
  SystemSpec sys;
  Rational beta;
  Rational rho1_1;      ///< diameter of Bob's first ball
  Rational rho;
  Rational rho_sharp;
  long lambda = 1;
  long clog = 0;        ///< ceil(log2 lambda)
  long clog_plus2 = 0;  ///< ceil(log2(lambda + 2)), System II only
  Rational R;           ///< System II expansion constant (0 for System I)
  Rational delta;
  Rational delta_final;

  /// Type II/III threshold on diam(T^{n-1} B) for System I (rho/gamma).
  Rational threshold_I() const { return rho / Rational(sys.gamma); }
};

StrategyConstants derive_constants_I(long gamma, const Rational& beta, const Rational& rho1_1);
StrategyConstants derive_constants_II(const Rational& beta, const Rational& rho1_1, const Rational& oracle_R);
/// Dispatch on the system; R is ignored for System I.
StrategyConstants derive_constants(const SystemSpec& sys, const Rational& beta, const Rational& rho1_1,
                                   const Rational& oracle_R);

/// The lower end 4/(R beta) psi^(1-lambda) of the admissible rho_sharp interval.
QuadraticSurd rho_sharp_lower_II(const Rational& beta, const Rational& R, long lambda);
/// The upper end (1/32)(beta/4)^(7 + ceil(log2 lambda)).
Rational rho_sharp_upper_II(const Rational& beta, long lambda);

}  // namespace absgame
