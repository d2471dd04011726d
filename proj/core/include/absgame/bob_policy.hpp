#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "absgame/ball.hpp"
#include "absgame/dynamics.hpp"
#include "absgame/game.hpp"
#include "absgame/twist.hpp"

namespace absgame {

class BobPolicy {
 public:
  virtual ~BobPolicy() = default;
  virtual std::string name() const = 0;
  /// Next ball for Bob, or nullopt when the policy forfeits.
  virtual std::optional<Ball> next(const GameState& state) = 0;
  /// Why the last call forfeited (empty otherwise).
  const std::string& forfeit_reason() const { return forfeit_; }

 protected:
  std::string forfeit_;
};

/// Default first ball of the deterministic policies.
Ball default_first_ball();

class RandomBob final : public BobPolicy {
 public:
  explicit RandomBob(std::uint64_t seed) : seed_(seed), rng_(seed) {}
  std::string name() const override { return "random:" + std::to_string(seed_); }
  std::optional<Ball> next(const GameState& state) override;

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

enum class Side { Left, Right };

class ExtremalBob final : public BobPolicy {
 public:
  explicit ExtremalBob(Side side) : side_(side) {}
  std::string name() const override { return side_ == Side::Left ? "extremal:left" : "extremal:right"; }
  std::optional<Ball> next(const GameState& state) override;

 private:
  Side side_;
};

/// Tracks the deepest order m at which a shrinking nested interval still lies in one cylinder.
class CylinderTracker {
 public:
  CylinderTracker(SystemSpec sys, long max_depth);
  /// Advance for a new interval nested inside every previous one.
  void update(const Interval& iv);
  const Branch& branch() const { return branch_; }
  long depth() const { return branch_.depth(); }

 private:
  SystemSpec sys_;
  long max_depth_;
  Branch branch_;
};

class ChaserBob final : public BobPolicy {
 public:
  ChaserBob(SystemSpec sys, TwistSequence twist, long lookahead = 3);
  std::string name() const override { return "chaser"; }
  std::optional<Ball> next(const GameState& state) override;

 private:
  Rational score(const Rational& z) const;

  SystemSpec sys_;
  TwistSequence twist_;
  long lookahead_;
  CylinderTracker tracker_;
};

class ReplayBob final : public BobPolicy {
 public:
  explicit ReplayBob(std::vector<Ball> balls, std::string source = "memory")
      : balls_(std::move(balls)), source_(std::move(source)) {}
  std::string name() const override { return "replay:" + source_; }
  std::optional<Ball> next(const GameState& state) override;

 private:
  std::vector<Ball> balls_;
  std::string source_;
  std::size_t pos_ = 0;
};

/// Parses random:<seed> | chaser | extremal:left | extremal:right | replay:<path>.
std::unique_ptr<BobPolicy> make_bob_policy(std::string_view spec, const SystemSpec& sys, const TwistSequence& twist);
/// Throws ParseError on a malformed spec without constructing anything.
void validate_bob_spec(std::string_view spec);

}  // namespace absgame
