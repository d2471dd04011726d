#include <gtest/gtest.h>

#include "absgame/bob_policy.hpp"
#include "absgame/twist.hpp"

using namespace absgame;

namespace {

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

GameState after_middle_deletion() {
  GameConfig cfg;
  cfg.beta = q(1, 4);
  GameState gs(cfg);
  EXPECT_TRUE(gs.play_bob(Ball(q(1, 2), q(1, 4))).accepted());
  EXPECT_TRUE(gs.play_alice(Ball(q(1, 2), q(1, 16))).accepted());
  return gs;
}

}  // namespace

TEST(Twist, Families) {
  EXPECT_EQ(TwistSequence::constant(Rational(0)).eval(5, q(2, 7)), Rational(0));
  EXPECT_EQ(TwistSequence::identity().eval(7, q(3, 5)), q(3, 5));
  EXPECT_EQ(TwistSequence::affine(q(1, 2)).eval(0, q(1, 2)), q(1, 2));
  EXPECT_EQ(TwistSequence::affine(Rational(1)).eval(3, q(1, 3)), q(1, 3));
}

TEST(Twist, Parse) {
  EXPECT_TRUE(TwistSequence::parse("const:0/1").is_constant_zero());
  EXPECT_EQ(TwistSequence::parse("identity").family(), TwistSequence::Family::Identity);
  EXPECT_EQ(TwistSequence::parse("affine:1/2").eval(4, Rational(0)), q(1, 8));
  EXPECT_THROW(TwistSequence::parse("affine:3/2"), std::invalid_argument);
  EXPECT_THROW(TwistSequence::parse("sin"), ParseError);
}

TEST(Twist, Modulus) {
  const TwistSequence id = TwistSequence::identity();
  EXPECT_EQ(id.modulus(q(1, 10)), q(1, 10));
  EXPECT_EQ(id.inverse_modulus(q(1, 10)), q(1, 10));
  EXPECT_EQ(TwistSequence::affine(q(1, 2)).inverse_modulus(q(1, 10)), q(1, 5));
  EXPECT_EQ(TwistSequence::constant(q(1, 3)).inverse_modulus(q(1, 10)), Rational(1));
}

TEST(Twist, ValuesStayInUnitInterval) {
  const TwistSequence a = TwistSequence::affine(q(9, 10));
  for (long n = 0; n < 30; ++n) {
    for (long k = 0; k <= 10; ++k) {
      const Rational v = a.eval(n, q(k, 10));
      EXPECT_GE(v, Rational(0));
      EXPECT_LE(v, Rational(1));
    }
  }
}

TEST(Bob, ExtremalLeftIsFlushAgainstLeftEnd) {
  const GameState gs = after_middle_deletion();
  ExtremalBob bob(Side::Left);
  const auto b = bob.next(gs);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->radius(), q(1, 16));
  EXPECT_EQ(b->left(), q(1, 4));
  EXPECT_TRUE(gs.validate_bob_move(*b).accepted());
}

TEST(Bob, ExtremalRightIsFlushAgainstRightEnd) {
  const GameState gs = after_middle_deletion();
  ExtremalBob bob(Side::Right);
  const auto b = bob.next(gs);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->right(), q(3, 4));
  EXPECT_TRUE(gs.validate_bob_move(*b).accepted());
}

TEST(Bob, RandomIsDeterministicAndLegal) {
  const GameState gs = after_middle_deletion();
  RandomBob a(7), b(7);
  for (int i = 0; i < 5; ++i) {
    const auto x = a.next(gs);
    const auto y = b.next(gs);
    ASSERT_TRUE(x && y);
    EXPECT_EQ(*x, *y);
    EXPECT_TRUE(gs.validate_bob_move(*x).accepted());
  }
}

TEST(Bob, ChaserIsLegal) {
  const GameState gs = after_middle_deletion();
  ChaserBob bob(SystemSpec::gauss(), TwistSequence::constant(Rational(0)));
  GameState fresh(gs.config());
  const auto first = bob.next(fresh);
  ASSERT_TRUE(first);
  const auto b = bob.next(gs);
  ASSERT_TRUE(b);
  EXPECT_TRUE(gs.validate_bob_move(*b).accepted());
}

TEST(Bob, ReplayForfeitsWhenExhaustedOrIllegal) {
  GameState gs(GameConfig{});
  ReplayBob bob({Ball(q(1, 2), q(1, 4))});
  ASSERT_TRUE(bob.next(gs));
  ASSERT_TRUE(gs.play_bob(Ball(q(1, 2), q(1, 4))).accepted());
  ASSERT_TRUE(gs.play_alice(Ball(q(1, 2), q(1, 16))).accepted());
  EXPECT_FALSE(bob.next(gs));
  EXPECT_NE(bob.forfeit_reason().find("exhausted"), std::string::npos);

  ReplayBob bad({Ball(q(1, 2), q(1, 4)), Ball(q(1, 2), q(1, 16))});
  GameState g2(GameConfig{});
  ASSERT_TRUE(g2.play_bob(*bad.next(g2)).accepted());
  ASSERT_TRUE(g2.play_alice(Ball(q(1, 2), q(1, 16))).accepted());
  EXPECT_FALSE(bad.next(g2));
  EXPECT_NE(bad.forfeit_reason().find("rejected"), std::string::npos);
}

TEST(Bob, SpecValidation) {
  EXPECT_NO_THROW(validate_bob_spec("random:12"));
  EXPECT_NO_THROW(validate_bob_spec("extremal:left"));
  EXPECT_NO_THROW(validate_bob_spec("replay:/tmp/x"));
  EXPECT_THROW(validate_bob_spec("random:"), ParseError);
  EXPECT_THROW(validate_bob_spec("random:1x"), ParseError);
  EXPECT_THROW(validate_bob_spec("sneaky"), ParseError);
}
