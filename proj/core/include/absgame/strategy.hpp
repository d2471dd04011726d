#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "absgame/ball.hpp"
#include "absgame/constants.hpp"
#include "absgame/dynamics.hpp"
#include "absgame/game.hpp"
#include "absgame/record.hpp"
#include "absgame/twist.hpp"

namespace absgame {

class StrategyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LevelType { I, II, III };
std::string to_string(LevelType t);

enum class MonitorMode { All, Minimal };
MonitorMode parse_monitor_mode(std::string_view text);
std::string to_string(MonitorMode m);

struct MonitorRecord {
  std::string name;
  long level = 0;
  bool pass = true;
  Rational value;
  Rational bound;

  Record record() const;
};

/// Bookkeeping for one level.
struct LevelState {
  long n = 0;
  Rational radius;   ///< radius of B_1^(n)
  Rational c;        ///< center c^(n)
  Rational target;   ///< f_n(c^(n)), paired with T^n
  Rational rho1;     ///< diam T^{n-1} B_1^(n)
  LevelType type = LevelType::I;
  long J = 0;
  Integer N = 0, K = 0;  ///< System II Type III only
  long H = 0, L = 0;
  int subcase = 0;
  long moves = 0;
};

struct AliceMove {
  Ball ball;
  long level = 0;
  LevelType type = LevelType::III;
  std::string phase;   ///< II, III, III.1, III.2, cleanup
  std::string reason;  ///< vertex, star, center, flush
  long pending = 0;    ///< points still queued for deletion
};

struct SeparationRecord {
  long level = 0;  ///< level whose close certified it
  long m = 0;
  Rational margin;
  Rational margin_prev;
};

struct FinalReport {
  Interval deepest;
  Rational witness;
  long N = 0;
  long depth = 0;
  std::optional<Rational> min_margin;
  std::optional<Integer> cf_max;  ///< System II only
  std::vector<Integer> cf_prefix;
};

/// Preimages under T^m of `target` inside `window`: the *-vertices of the next level.
std::vector<Rational> star_vertices(const SystemSpec& sys, long m, const Rational& target, const Interval& window);

class AliceStrategy {
 public:
  AliceStrategy(SystemSpec sys, Rational beta, TwistSequence twist, Rational oracle_R,
                MonitorMode mode = MonitorMode::All);

  /// Called after every Bob move; returns Alice's reply. Type I relabels are absorbed.
  AliceMove respond(const GameState& gs);
  /// Final checks against the deepest Bob ball; call once after the last round.
  FinalReport finish(const GameState& gs);

  /// Drains the transcript records accumulated since the last call.
  std::vector<Record> take_records();

  bool started() const { return consts_.has_value(); }
  const StrategyConstants& constants() const { return *consts_; }
  const std::vector<MonitorRecord>& monitors() const { return monitors_; }
  const std::vector<LevelState>& levels() const { return levels_; }
  const std::vector<SeparationRecord>& separations() const { return seps_; }
  long current_level() const { return n_; }
  long last_type_III() const { return J_; }
  bool all_monitors_pass() const;

  /// The *-vertices (targets J < m < n) lying in the closed ball.
  std::vector<Rational> star_set(const Ball& b);

 private:
  enum class Phase { Classify, AfterII, LoopI, Sub1, Sub2, Cleanup };

  bool ensure_branch(long m);
  const Branch& branch(long m) const { return branches_[static_cast<std::size_t>(m)]; }
  Interval image(long m) const;
  Rational reach() const;
  std::vector<Rational> stars_within_reach(long m_lo, long m_hi);
  std::vector<Rational> stars_for(long m, bool reach_only, bool* unresolved);
  std::vector<Rational> interior_vertices_n();
  Rational margin(long m, const Interval& iv) const;

  LevelType classify();
  void open_type_III();
  std::optional<AliceMove> step();
  AliceMove make_move(const Rational& center, std::string reason, long pending);
  void close_level();
  void monitor(std::string name, long level, bool pass, const Rational& value, const Rational& bound, bool minimal = false);
  static Rational median(std::vector<Rational> pts);

  SystemSpec sys_;
  Rational beta_;
  TwistSequence twist_;
  Rational oracle_R_;
  MonitorMode mode_;
  std::optional<StrategyConstants> consts_;

  std::optional<Ball> cur_;
  std::vector<Branch> branches_;
  std::vector<LevelState> levels_;  ///< levels_[n-1] is level n
  std::vector<Rational> targets_;   ///< targets_[m] = f_m(c^(m)); index 0 unused
  std::vector<Rational> close_margin_;  ///< per m, margin recorded at close (index 0 unused)
  std::vector<SeparationRecord> seps_;
  std::vector<MonitorRecord> monitors_;
  std::vector<Record> pending_records_;

  Phase phase_ = Phase::Classify;
  long n_ = 1;
  long J_ = 0;
  long k_ = 1;           ///< ball index within the current level
  long moves_in_level_ = 0;
  long cleanup_moves_ = 0;
  bool typeII_since_J_ = false;
  bool seen_III_ = false;
  bool check_radius_chain_ = false;
  bool budget_flagged_ = false;
  Rational sub2_threshold_;
};

}  // namespace absgame
