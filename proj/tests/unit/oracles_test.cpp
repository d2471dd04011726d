#include <gtest/gtest.h>

#include "absgame/oracles.hpp"

using namespace absgame;

TEST(Oracles, KindNames) {
  for (OracleKind k : {OracleKind::Expansion, OracleKind::Distortion, OracleKind::Cylinders, OracleKind::Fibonacci}) {
    EXPECT_EQ(parse_oracle_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_oracle_kind("entropy"), std::exception);
}

TEST(Oracles, CylindersSmall) {
  const OracleTable t = cylinder_oracle(3, 3);
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.rows[0].cylinders, 3);
  EXPECT_EQ(t.rows[2].cylinders, 27);
  EXPECT_TRUE(t.passed());
}

TEST(Oracles, FibonacciSmall) { EXPECT_TRUE(fibonacci_oracle(5, 3).passed()); }

TEST(Oracles, DistortionSmall) {
  const OracleTable t = distortion_oracle(4, 50, 3);
  EXPECT_TRUE(t.passed());
  for (const OracleRow& r : t.rows) EXPECT_GE(r.min_ratio, Rational(Integer(1), Integer(4)));
}

TEST(Oracles, ExpansionPositive) {
  const OracleTable t = expansion_oracle(6);
  EXPECT_TRUE(t.passed());
  EXPECT_GT(t.overall_min(), Rational(0));
  EXPECT_EQ(certified_R(t), t.overall_min() / Rational(2));
}

TEST(Oracles, TsvRoundTrip) {
  const OracleTable t = cylinder_oracle(3, 2);
  const std::string tsv = to_tsv(t);
  EXPECT_EQ(tsv.substr(0, tsv.find('\n')), "n\tmin_ratio\tcylinders\tcap\tviolations");
  const OracleTable back = parse_oracle_tsv(OracleKind::Cylinders, tsv);
  EXPECT_EQ(to_tsv(back), tsv);
}
