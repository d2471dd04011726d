#include "absgame/game.hpp"

#include <stdexcept>

namespace absgame {

std::string to_string(RuleSet r) { return r == RuleSet::Absolute ? "absolute" : "schmidt"; }
std::string to_string(Player p) { return p == Player::Bob ? "bob" : "alice"; }

std::string to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::Ok:
      return "Ok";
    case VerdictReason::NotNested:
      return "NotNested";
    case VerdictReason::RadiusTooSmall:
      return "RadiusTooSmall";
    case VerdictReason::RadiusTooLarge:
      return "RadiusTooLarge";
    case VerdictReason::RadiusMismatch:
      return "RadiusMismatch";
    case VerdictReason::WrongTurn:
      return "WrongTurn";
    case VerdictReason::GameOver:
      return "GameOver";
  }
  return "Unknown";
}

void GameConfig::validate() const {
  const Rational zero(0), one(1), third(1, 3);
  if (max_rounds < 0) throw std::invalid_argument("rounds must be >= 0");
  if (rules == RuleSet::Absolute) {
    if (beta <= zero) throw std::invalid_argument("beta must be > 0");
    if (beta > third || (beta == third && !unsafe_beta_third)) {
      throw std::invalid_argument("absolute game needs 0 < beta < 1/3 (beta = 1/3 only with --unsafe-beta-third)");
    }
  } else {
    if (beta <= zero || beta >= one) throw std::invalid_argument("schmidt game needs 0 < beta < 1");
    if (alpha <= zero || alpha >= one) throw std::invalid_argument("schmidt game needs 0 < alpha < 1");
  }
}

GameState::GameState(GameConfig config) : config_(std::move(config)) { config_.validate(); }

Player GameState::to_move() const {
  if (history_.empty()) return Player::Bob;
  return history_.back().player == Player::Bob ? Player::Alice : Player::Bob;
}

std::optional<Ball> GameState::last_bob() const {
  for (auto it = history_.rbegin(); it != history_.rend(); ++it) {
    if (it->player == Player::Bob) return it->ball;
  }
  return std::nullopt;
}

std::optional<Ball> GameState::last_alice() const {
  for (auto it = history_.rbegin(); it != history_.rend(); ++it) {
    if (it->player == Player::Alice) return it->ball;
  }
  return std::nullopt;
}

std::vector<Interval> GameState::bob_region() const {
  const auto bob = last_bob();
  if (!bob) return {unit_interval()};
  const auto alice = last_alice();
  if (config_.rules == RuleSet::Schmidt) return {alice->interval()};
  return complement_components(bob->interval(), alice->interval());
}

Rational GameState::bob_min_radius() const {
  const auto bob = last_bob();
  if (!bob) return Rational(0);
  if (config_.rules == RuleSet::Schmidt) return config_.beta * last_alice()->radius();
  return config_.beta * bob->radius();
}

Verdict GameState::validate_bob_move(const Ball& ball) const {
  if (status_ == GameStatus::Finished) return Verdict::reject(VerdictReason::GameOver, "game is finished");
  if (to_move() != Player::Bob) return Verdict::reject(VerdictReason::WrongTurn, "it is Alice's turn");
  if (history_.empty()) return Verdict::ok();
  const Ball prev_bob = *last_bob();
  const Ball alice = *last_alice();
  if (config_.rules == RuleSet::Schmidt) {
    const Rational want = config_.beta * alice.radius();
    if (ball.radius() != want) {
      return Verdict::reject(VerdictReason::RadiusMismatch, "radius " + ball.radius().str() + " != beta*rho = " + want.str());
    }
    if (!ball_contains(alice, ball)) {
      return Verdict::reject(VerdictReason::NotNested, to_string(ball) + " not inside " + to_string(alice));
    }
    return Verdict::ok();
  }
  const Rational min_r = config_.beta * prev_bob.radius();
  if (ball.radius() < min_r) {
    return Verdict::reject(VerdictReason::RadiusTooSmall,
                           "radius " + ball.radius().str() + " < beta*r = " + min_r.str());
  }
  const Interval iv = ball.interval();
  for (const Interval& comp : complement_components(prev_bob.interval(), alice.interval())) {
    if (comp.contains(iv)) return Verdict::ok();
  }
  return Verdict::reject(VerdictReason::NotNested,
                         to_string(ball) + " not inside a component of " + to_string(prev_bob) + " minus " + to_string(alice));
}

Verdict GameState::validate_alice_move(const Ball& ball) const {
  if (status_ == GameStatus::Finished) return Verdict::reject(VerdictReason::GameOver, "game is finished");
  if (to_move() != Player::Alice) return Verdict::reject(VerdictReason::WrongTurn, "it is Bob's turn");
  const Ball bob = *last_bob();
  if (config_.rules == RuleSet::Schmidt) {
    const Rational want = config_.alpha * bob.radius();
    if (ball.radius() != want) {
      return Verdict::reject(VerdictReason::RadiusMismatch, "radius " + ball.radius().str() + " != alpha*r = " + want.str());
    }
    if (!ball_contains(bob, ball)) {
      return Verdict::reject(VerdictReason::NotNested, to_string(ball) + " not inside " + to_string(bob));
    }
    return Verdict::ok();
  }
  const Rational cap = config_.beta * bob.radius();
  if (ball.radius() > cap) {
    return Verdict::reject(VerdictReason::RadiusTooLarge, "radius " + ball.radius().str() + " > beta*r = " + cap.str());
  }
  return Verdict::ok();
}

Verdict GameState::play_bob(const Ball& ball) {
  Verdict v = validate_bob_move(ball);
  if (!v.accepted()) return v;
  ++round_;
  history_.push_back(Move{Player::Bob, ball, round_});
  return v;
}

Verdict GameState::play_alice(const Ball& ball) {
  Verdict v = validate_alice_move(ball);
  if (!v.accepted()) return v;
  history_.push_back(Move{Player::Alice, ball, round_});
  if (config_.rules == RuleSet::Absolute && !bob_has_legal_reply()) {
    alice_default_win_ = true;
    status_ = GameStatus::Finished;
  }
  return v;
}

bool GameState::bob_has_legal_reply() const {
  if (history_.empty()) return true;
  const Rational s = bob_min_radius();
  const Rational zero(0), one(1);
  for (const Interval& c : bob_region()) {
    if (c.length() >= s + s) return true;
    if (c.lo == zero && c.hi >= s) return true;
    if (c.hi == one && c.lo <= one - s) return true;
  }
  return false;
}

void GameState::finish() { status_ = GameStatus::Finished; }

Interval deepest_interval(const GameState& state) {
  const auto bob = state.last_bob();
  if (!bob) throw std::logic_error("deepest_interval: no Bob move yet");
  return bob->interval();
}

}  // namespace absgame
