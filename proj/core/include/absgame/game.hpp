#pragma once

#include <optional>
#include <string>
#include <vector>

#include "absgame/ball.hpp"
#include "absgame/rational.hpp"

namespace absgame {

enum class RuleSet { Absolute, Schmidt };
enum class Player { Bob, Alice };

std::string to_string(RuleSet r);
std::string to_string(Player p);

struct GameConfig {
  RuleSet rules = RuleSet::Absolute;
  Rational beta = Rational(1, 4);
  Rational alpha = Rational(1, 2);  ///< Schmidt only
  long max_rounds = 0;
  bool unsafe_beta_third = false;

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

struct Move {
  Player player = Player::Bob;
  Ball ball;
  long round = 0;
};

enum class VerdictReason { Ok, NotNested, RadiusTooSmall, RadiusTooLarge, RadiusMismatch, WrongTurn, GameOver };

std::string to_string(VerdictReason r);

struct Verdict {
  VerdictReason reason = VerdictReason::Ok;
  std::string detail;

  bool accepted() const { return reason == VerdictReason::Ok; }
  static Verdict ok() { return {}; }
  static Verdict reject(VerdictReason r, std::string d) { return Verdict{r, std::move(d)}; }
};

enum class GameStatus { InProgress, Finished };

class GameState {
 public:
  explicit GameState(GameConfig config);

  const GameConfig& config() const { return config_; }
  const std::vector<Move>& history() const { return history_; }
  GameStatus status() const { return status_; }
  Player to_move() const;
  /// Index of the current round (the round of the last Bob move); 0 before any move.
  long round() const { return round_; }
  /// Set when Bob had no legal reply and Alice was declared the winner.
  bool alice_won_by_default() const { return alice_default_win_; }

  std::optional<Ball> last_bob() const;
  std::optional<Ball> last_alice() const;

  Verdict validate_bob_move(const Ball& ball) const;
  Verdict validate_alice_move(const Ball& ball) const;

  /// Validate and append; the state is unchanged on rejection.
  Verdict play_bob(const Ball& ball);
  Verdict play_alice(const Ball& ball);

  /// Closed intervals inside which Bob's next ball must lie (absolute rules).
  std::vector<Interval> bob_region() const;
  /// Minimum radius of Bob's next ball.
  Rational bob_min_radius() const;
  bool bob_has_legal_reply() const;

  void finish();

 private:
  GameConfig config_;
  std::vector<Move> history_;
  GameStatus status_ = GameStatus::InProgress;
  long round_ = 0;
  bool alice_default_win_ = false;
};

/// Last Bob ball's interval; throws std::logic_error on an empty history.
Interval deepest_interval(const GameState& state);

}  // namespace absgame
