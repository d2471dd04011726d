#include "absgame/constants.hpp"

namespace absgame {

namespace {

void require_beta(const Rational& beta) {
  if (beta.sign() <= 0 || beta > Rational(1, 3)) throw std::invalid_argument("beta must lie in (0, 1/3]");
}

}  // namespace

StrategyConstants derive_constants_I(long gamma, const Rational& beta, const Rational& rho1_1) {
  require_beta(beta);
  if (rho1_1.sign() <= 0) throw std::invalid_argument("rho1_1 must be positive");
  StrategyConstants c;
  c.sys = SystemSpec::beta(gamma);
  c.beta = beta;
  c.rho1_1 = rho1_1;
  const Rational g(gamma);
  c.rho_sharp = pow(g, 4) / beta;
  c.rho = beta * min(rho1_1, c.rho_sharp);
  c.lambda = ceil_log((c.rho * beta).reciprocal(), Integer(gamma)) + 1;
  c.clog = ceil_log2(c.lambda);
  c.clog_plus2 = ceil_log2(c.lambda + 2);
  c.R = Rational(0);
  c.delta = pow(g, -c.lambda) * Rational(1, 2) * pow(beta, c.clog + 3) * beta / (Rational(2) * g);
  c.delta_final = c.delta / Rational(2);
  return c;
}

QuadraticSurd rho_sharp_lower_II(const Rational& beta, const Rational& R, long lambda) {
  return QuadraticSurd(Rational(4) / (R * beta)) * psi_pow(1 - lambda);
}

Rational rho_sharp_upper_II(const Rational& beta, long lambda) {
  return Rational(1, 32) * pow(beta / Rational(4), 7 + ceil_log2(lambda));
}

StrategyConstants derive_constants_II(const Rational& beta, const Rational& rho1_1, const Rational& oracle_R) {
  require_beta(beta);
  if (rho1_1.sign() <= 0) throw std::invalid_argument("rho1_1 must be positive");
  if (oracle_R.sign() <= 0) throw std::invalid_argument("R must be positive");
  StrategyConstants c;
  c.sys = SystemSpec::gauss();
  c.beta = beta;
  c.rho1_1 = rho1_1;
  c.R = oracle_R;

  const QuadraticSurd inv_psi = psi_pow(-1);
  QuadraticSurd lower = QuadraticSurd(Rational(4) / (oracle_R * beta)) * inv_psi;  // lambda = 2
  long lambda = 2;
  constexpr long kMaxLambda = 1'000'000;
  while (!(lower < QuadraticSurd(rho_sharp_upper_II(beta, lambda)))) {
    if (++lambda > kMaxLambda) throw InfeasibleConstants("no lambda <= 10^6 satisfies the constant system");
    lower = lower * inv_psi;
  }
  const Rational upper = rho_sharp_upper_II(beta, lambda);
  Rational lower_q;
  for (long digits = 20;; digits *= 2) {
    lower_q = lower.upper_bound(digits);
    if (lower_q < upper) break;
  }
  c.lambda = lambda;
  c.clog = ceil_log2(lambda);
  c.clog_plus2 = ceil_log2(lambda + 2);
  c.rho_sharp = (lower_q + upper) / Rational(2);
  c.rho = min(rho1_1, c.rho_sharp);

  const Rational& b = beta;
  const Rational& rho = c.rho;
  const Rational d1 = Rational(1, 4) * pow(b, 1 + c.clog_plus2) * rho;
  const Rational half = rho * b / Rational(2);
  const Rational d2 = pow(b, c.clog + 6) / Rational(8) * half * half;
  const Rational d3 = Rational(1, 16) * b * rho * pow(b, c.clog + 1);
  c.delta = min(d1, min(d2, d3));
  c.delta_final = c.delta / Rational(2);
  return c;
}

StrategyConstants derive_constants(const SystemSpec& sys, const Rational& beta, const Rational& rho1_1,
                                   const Rational& oracle_R) {
  if (sys.is_beta()) return derive_constants_I(sys.gamma, beta, rho1_1);
  return derive_constants_II(beta, rho1_1, oracle_R);
}

}  // namespace absgame
