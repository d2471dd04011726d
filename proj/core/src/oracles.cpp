#include "absgame/oracles.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "absgame/dynamics.hpp"
#include "absgame/quadratic.hpp"

namespace absgame {

namespace {

constexpr long kRatioDigits = 6;

Rational floor_to_grid(const Rational& x) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, kRatioDigits);
  return Rational((x * Rational(scale)).floor(), scale);
}

/// Visits every Gauss branch with digits 1..cap up to max_depth (depth >= 1), depth first.
void for_each_branch(long max_depth, long cap, const std::function<void(const Branch&, const std::vector<Integer>&)>& fn) {
  std::vector<Integer> digits;
  std::function<void(const Branch&)> rec = [&](const Branch& b) {
    if (b.depth() >= max_depth) return;
    for (long a = 1; a <= cap; ++a) {
      const Branch child = b.extend(Integer(a));
      digits.emplace_back(a);
      fn(child, digits);
      rec(child);
      digits.pop_back();
    }
  };
  rec(Branch::identity(SystemSpec::gauss()));
}

std::vector<OracleRow> make_rows(long max_depth, long cap) {
  std::vector<OracleRow> rows(static_cast<std::size_t>(max_depth));
  for (long n = 1; n <= max_depth; ++n) {
    rows[static_cast<std::size_t>(n - 1)].n = n;
    rows[static_cast<std::size_t>(n - 1)].cap = cap;
  }
  return rows;
}

}  // namespace

std::string to_string(OracleKind k) {
  switch (k) {
    case OracleKind::Expansion:
      return "expansion";
    case OracleKind::Distortion:
      return "distortion";
    case OracleKind::Cylinders:
      return "cylinders";
    case OracleKind::Fibonacci:
      return "fibonacci";
  }
  return "?";
}

OracleKind parse_oracle_kind(std::string_view text) {
  if (text == "expansion") return OracleKind::Expansion;
  if (text == "distortion") return OracleKind::Distortion;
  if (text == "cylinders") return OracleKind::Cylinders;
  if (text == "fibonacci") return OracleKind::Fibonacci;
  throw ParseError("unknown oracle kind '" + std::string(text) + "'");
}

bool OracleTable::passed() const {
  for (const auto& r : rows) {
    if (r.violations != 0) return false;
  }
  return !rows.empty();
}

Rational OracleTable::overall_min() const {
  Rational m = rows.front().min_ratio;
  for (const auto& r : rows) m = min(m, r.min_ratio);
  return m;
}

OracleTable expansion_oracle(long max_depth, long cap) {
  OracleTable t{OracleKind::Expansion, make_rows(max_depth, cap)};
  std::vector<Rational> min_deriv(static_cast<std::size_t>(max_depth));
  std::vector<bool> seen(static_cast<std::size_t>(max_depth), false);
  for_each_branch(max_depth, cap, [&](const Branch& b, const std::vector<Integer>&) {
    const auto i = static_cast<std::size_t>(b.depth() - 1);
    const Interval cyl = b.cylinder();
    const Rational d = min(b.derivative(cyl.lo), b.derivative(cyl.hi));
    if (!seen[i] || d < min_deriv[i]) min_deriv[i] = d;
    seen[i] = true;
    ++t.rows[i].cylinders;
  });
  for (long n = 1; n <= max_depth; ++n) {
    auto& row = t.rows[static_cast<std::size_t>(n - 1)];
    const Rational psi_inv_lower = psi_pow(-n).lower_bound(2 * kRatioDigits + 4 * n);
    row.min_ratio = floor_to_grid(min_deriv[static_cast<std::size_t>(n - 1)] * psi_inv_lower);
    if (row.min_ratio.sign() <= 0) row.violations = 1;
  }
  return t;
}

OracleTable distortion_oracle(long max_depth, long pairs_per_depth, std::uint64_t seed, long cap) {
  OracleTable t{OracleKind::Distortion, make_rows(max_depth, cap)};
  const SystemSpec gauss = SystemSpec::gauss();
  const Rational lo(1, 4), hi(4);
  auto record = [&](OracleRow& row, const Rational& r) {
    const Rational folded = r < Rational(1) ? r : r.reciprocal();
    if (row.cylinders == 0 || folded < row.min_ratio) row.min_ratio = folded;
    ++row.cylinders;
    if (r < lo || r > hi) ++row.violations;
  };
  for_each_branch(max_depth, cap, [&](const Branch& b, const std::vector<Integer>&) {
    const Interval cyl = b.cylinder();
    record(t.rows[static_cast<std::size_t>(b.depth() - 1)], b.derivative(cyl.lo) / b.derivative(cyl.hi));
  });
  std::mt19937_64 rng(seed);
  const Integer grid = Integer(1) << 20;
  auto random_t = [&]() { return Rational(Integer(static_cast<unsigned long>(rng() % ((1u << 20) + 1))), grid); };
  for (long m = 1; m <= max_depth; ++m) {
    auto& row = t.rows[static_cast<std::size_t>(m - 1)];
    for (long p = 0; p < pairs_per_depth; ++p) {
      Branch b = Branch::identity(gauss);
      for (long k = 0; k < m; ++k) {
        const bool big = rng() % 8 == 0;
        const unsigned long a = big ? 1 + rng() % 1000 : 1 + rng() % 8;
        b = b.extend(Integer(a));
      }
      const Rational x = b.inverse(random_t());
      const Rational y = b.inverse(random_t());
      record(row, distortion_ratio(gauss, m, x, y));
    }
  }
  return t;
}

OracleTable cylinder_oracle(long max_depth, long cap) {
  OracleTable t{OracleKind::Cylinders, make_rows(max_depth, cap)};
  const SystemSpec gauss = SystemSpec::gauss();
  for_each_branch(max_depth, cap, [&](const Branch& b, const std::vector<Integer>& digits) {
    auto& row = t.rows[static_cast<std::size_t>(b.depth() - 1)];
    const Interval iv = cylinder_interval(gauss, CylinderAddress{digits});
    const Continuants c = continuants(digits);
    const Rational ratio = iv.length() * Rational(Integer(c.q_n * (c.q_n + c.q_prev)));
    if (row.cylinders == 0 || ratio < row.min_ratio) row.min_ratio = ratio;
    ++row.cylinders;
    if (ratio != Rational(1)) ++row.violations;
  });
  return t;
}

OracleTable fibonacci_oracle(long max_depth, long cap) {
  OracleTable t{OracleKind::Fibonacci, make_rows(max_depth, cap)};
  for_each_branch(max_depth, cap, [&](const Branch& b, const std::vector<Integer>& digits) {
    auto& row = t.rows[static_cast<std::size_t>(b.depth() - 1)];
    const Continuants c = continuants(digits);
    const Rational ratio(c.q_n, fibonacci(b.depth()));
    if (row.cylinders == 0 || ratio < row.min_ratio) row.min_ratio = ratio;
    ++row.cylinders;
    if (ratio < Rational(1)) ++row.violations;
  });
  return t;
}

OracleTable run_oracle(OracleKind kind, long max_depth) {
  switch (kind) {
    case OracleKind::Expansion:
      if (max_depth > 15) throw std::invalid_argument("expansion oracle depth is capped at 15");
      return expansion_oracle(max_depth);
    case OracleKind::Distortion:
      if (max_depth > 15) throw std::invalid_argument("distortion oracle depth is capped at 15");
      return distortion_oracle(max_depth);
    case OracleKind::Cylinders:
      if (max_depth > 6) throw std::invalid_argument("cylinder oracle depth is capped at 6");
      return cylinder_oracle(max_depth);
    case OracleKind::Fibonacci:
      if (max_depth > 6) throw std::invalid_argument("fibonacci oracle depth is capped at 6");
      return fibonacci_oracle(max_depth);
  }
  throw std::invalid_argument("unknown oracle");
}

Rational certified_R(const OracleTable& expansion) { return expansion.overall_min() / Rational(2); }

const Rational& default_R() {
  static const Rational r = certified_R(expansion_oracle(15));
  return r;
}

std::string to_tsv(const OracleTable& table) {
  std::ostringstream os;
  os << "n\tmin_ratio\tcylinders\tcap\tviolations\n";
  for (const auto& r : table.rows) {
    os << r.n << '\t' << r.min_ratio.str() << '\t' << r.cylinders << '\t' << r.cap << '\t' << r.violations << '\n';
  }
  return os.str();
}

OracleTable parse_oracle_tsv(OracleKind kind, std::string_view text) {
  OracleTable t{kind, {}};
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line) || line != "n\tmin_ratio\tcylinders\tcap\tviolations") {
    throw ParseError("oracle table: bad header");
  }
  long lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string n, ratio, cyl, cap, viol;
    if (!std::getline(ls, n, '\t') || !std::getline(ls, ratio, '\t') || !std::getline(ls, cyl, '\t') ||
        !std::getline(ls, cap, '\t') || !std::getline(ls, viol)) {
      throw ParseError("oracle table line " + std::to_string(lineno) + ": expected 5 fields");
    }
    OracleRow row;
    try {
      row.n = std::stol(n);
      row.cylinders = std::stol(cyl);
      row.cap = std::stol(cap);
      row.violations = std::stol(viol);
    } catch (const std::exception&) {
      throw ParseError("oracle table line " + std::to_string(lineno) + ": malformed integer");
    }
    row.min_ratio = Rational::parse(ratio);
    t.rows.push_back(row);
  }
  return t;
}

}  // namespace absgame
