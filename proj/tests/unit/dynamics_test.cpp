#include <gtest/gtest.h>

#include "absgame/dynamics.hpp"

using namespace absgame;

namespace {

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

std::vector<Rational> R(std::initializer_list<Rational> xs) { return xs; }

const SystemSpec kGauss = SystemSpec::gauss();

}  // namespace

TEST(System, Parse) {
  EXPECT_EQ(SystemSpec::parse("beta:3"), SystemSpec::beta(3));
  EXPECT_EQ(SystemSpec::parse("gauss"), SystemSpec::gauss());
  EXPECT_EQ(SystemSpec::beta(10).str(), "beta:10");
  EXPECT_THROW(SystemSpec::parse("beta:1"), std::exception);
  EXPECT_THROW(SystemSpec::parse("tent"), std::exception);
}

TEST(Dynamics, ApplyMap) {
  EXPECT_EQ(apply_map(SystemSpec::beta(2), q(3, 8)), q(3, 4));
  EXPECT_EQ(apply_map(kGauss, q(2, 5)), q(1, 2));
  EXPECT_EQ(apply_map(kGauss, Rational(0)), Rational(0));
  EXPECT_EQ(iterate_map(kGauss, 2, q(2, 5)), Rational(0));
}

TEST(Dynamics, EnumerateVertices) {
  EXPECT_EQ(enumerate_vertices(SystemSpec::beta(2), 2, unit_interval()).points,
            R({Rational(0), q(1, 4), q(1, 2), q(3, 4), Rational(1)}));
  EXPECT_EQ(enumerate_vertices(kGauss, 1, Interval(q(1, 4), Rational(1))).points,
            R({q(1, 4), q(1, 3), q(1, 2), Rational(1)}));
  EXPECT_TRUE(enumerate_vertices(kGauss, 0, Interval(q(1, 3), q(2, 3))).points.empty());
  EXPECT_TRUE(enumerate_vertices(SystemSpec::beta(3), 0, Interval(q(1, 3), q(2, 3))).points.empty());
}

TEST(Dynamics, CylinderOf) {
  EXPECT_EQ(cylinder_of(kGauss, 2, q(5, 8)).digits, (std::vector<Integer>{1, 1}));
  EXPECT_EQ(cylinder_of(SystemSpec::beta(2), 3, q(5, 16)).digits, (std::vector<Integer>{0, 1, 0}));
  EXPECT_EQ(cylinder_of(kGauss, 1, q(2, 5)).digits, (std::vector<Integer>{2}));
}

TEST(Dynamics, CylinderInterval) {
  EXPECT_EQ(cylinder_interval(kGauss, CylinderAddress{{1, 1}}), Interval(q(1, 2), q(2, 3)));
  EXPECT_EQ(cylinder_interval(kGauss, CylinderAddress{{1, 1, 1}}).length(), q(1, 15));
  EXPECT_EQ(cylinder_interval(kGauss, CylinderAddress{{2}}), Interval(q(1, 3), q(1, 2)));
  EXPECT_EQ(cylinder_interval(SystemSpec::beta(3), CylinderAddress{{2}}), Interval(q(2, 3), Rational(1)));
  EXPECT_EQ(cylinder_interval(SystemSpec::beta(2), CylinderAddress{{0, 1, 0}}), Interval(q(1, 4), q(3, 8)));
}

TEST(Dynamics, IntervalImage) {
  EXPECT_EQ(interval_image(SystemSpec::beta(2), 1, Interval(q(1, 8), q(3, 8))), Interval(q(1, 4), q(3, 4)));
  EXPECT_EQ(interval_image(kGauss, 1, Interval(q(7, 20), q(9, 20))), Interval(q(2, 9), q(6, 7)));
  const Interval iv(q(1, 3), q(2, 3));
  EXPECT_EQ(interval_image(kGauss, 0, iv), iv);
  EXPECT_THROW(interval_image(SystemSpec::beta(2), 1, Interval(q(1, 4), q(3, 4))), InjectivityError);
}

TEST(Dynamics, BranchPreimages) {
  EXPECT_EQ(branch_preimages(SystemSpec::beta(2), 1, q(1, 3), unit_interval()).points, R({q(1, 6), q(2, 3)}));
  EXPECT_EQ(branch_preimages(kGauss, 1, q(1, 2), Interval(q(1, 3), q(1, 2))).points, R({q(2, 5)}));
  EXPECT_TRUE(branch_preimages(kGauss, 0, q(1, 3), Interval(q(1, 2), Rational(1))).points.empty());
}

TEST(Dynamics, Derivatives) {
  EXPECT_EQ(derivative_magnitude(kGauss, 1, q(1, 2)), Rational(4));
  EXPECT_EQ(derivative_magnitude(SystemSpec::beta(3), 2, q(1, 5)), Rational(9));
  EXPECT_EQ(derivative_magnitude(kGauss, 2, q(2, 5)), Rational(25));
  EXPECT_EQ(distortion_ratio(kGauss, 1, q(1, 2), Rational(1)), Rational(4));
  EXPECT_EQ(distortion_ratio(SystemSpec::beta(2), 4, q(1, 15), q(1, 10)), Rational(1));
  EXPECT_EQ(distortion_ratio(kGauss, 3, q(3, 11), q(3, 11)), Rational(1));
}

TEST(Dynamics, BranchRoundTrip) {
  const Branch b = Branch::of(kGauss, CylinderAddress{{2, 3, 1}});
  const Interval cyl = b.cylinder();
  const Rational x = cyl.midpoint();
  EXPECT_EQ(b.inverse(b.forward(x)), x);
  EXPECT_EQ(b.forward(x), iterate_map(kGauss, 3, x));
  EXPECT_EQ(b.image(cyl), unit_interval());
  const Branch e = Branch::identity(SystemSpec::beta(3)).extend(2).extend(0);
  EXPECT_EQ(e.cylinder(), Interval(q(6, 9), q(7, 9)));
}

TEST(Dynamics, ContinuantsAndFibonacci) {
  const Continuants c = continuants({1, 1, 1});
  EXPECT_EQ(c.q_n, 3);
  EXPECT_EQ(c.q_prev, 2);
  EXPECT_EQ(fibonacci(1), 1);
  EXPECT_EQ(fibonacci(2), 1);
  EXPECT_EQ(fibonacci(10), 55);
}

TEST(Dynamics, FirstOrderVertices) {
  const FirstOrderVertices v = first_order_vertices(kGauss, Interval(q(1, 5), q(3, 5)));
  EXPECT_EQ(v.count, 4);
  EXPECT_EQ(v.leftmost, q(1, 5));
  EXPECT_EQ(v.rightmost, q(1, 2));
  EXPECT_TRUE(first_order_vertices(kGauss, Interval(Rational(0), q(1, 9))).infinite);
  EXPECT_TRUE(has_interior_first_order_vertex(SystemSpec::beta(2), Interval(q(1, 4), q(3, 4))));
  EXPECT_FALSE(has_interior_first_order_vertex(SystemSpec::beta(2), Interval(q(1, 2), q(3, 4))));
}
