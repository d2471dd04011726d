#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absgame/rational.hpp"

namespace absgame {

enum class OracleKind { Expansion, Distortion, Cylinders, Fibonacci };

std::string to_string(OracleKind k);
OracleKind parse_oracle_kind(std::string_view text);

struct OracleRow {
  long n = 0;
  Rational min_ratio;
  long cylinders = 0;  ///< cylinders (and sampled pairs) examined at this depth
  long cap = 0;        ///< largest digit enumerated
  long violations = 0;
};

struct OracleTable {
  OracleKind kind = OracleKind::Expansion;
  std::vector<OracleRow> rows;

  bool passed() const;
  Rational overall_min() const;
};

/// Certified lower bounds on min |D T^n| * psi^-n over all Gauss-map cylinders, n = 1..max_depth.
OracleTable expansion_oracle(long max_depth, long cap = 2);
/// Ratios |D_x T^m| / |D_y T^m| over cylinder endpoints (digits <= cap) and random same-cylinder pairs.
OracleTable distortion_oracle(long max_depth, long pairs_per_depth = 1000, std::uint64_t seed = 1, long cap = 2);
/// diam = 1/(q_n (q_n + q_{n-1})) for every cylinder with digits <= cap.
OracleTable cylinder_oracle(long max_depth, long cap = 4);
/// q_n >= F_n for every address with digits <= cap.
OracleTable fibonacci_oracle(long max_depth, long cap = 4);

OracleTable run_oracle(OracleKind kind, long max_depth);

/// The expansion constant consumed by the System II constants: half the table minimum.
Rational certified_R(const OracleTable& expansion);
/// certified_R(expansion_oracle(15)), computed once.
const Rational& default_R();

std::string to_tsv(const OracleTable& table);
OracleTable parse_oracle_tsv(OracleKind kind, std::string_view text);

}  // namespace absgame
