#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "absgame/bob_policy.hpp"
#include "absgame/dynamics.hpp"
#include "absgame/oracles.hpp"
#include "absgame/strategy.hpp"
#include "absgame/transcript.hpp"

namespace absgame {

struct RunConfig {
  SystemSpec system = SystemSpec::beta(2);
  Rational beta = Rational(1, 4);
  long rounds = 300;
  std::string bob = "random:1";
  std::string twist = "const:0/1";
  MonitorMode monitors = MonitorMode::All;
  bool unsafe_beta_third = false;
  std::optional<std::filesystem::path> out;

  /// Throws std::invalid_argument (or ParseError) naming the violated constraint.
  void validate() const;
  Record record() const;
  static RunConfig from_record(const Record& r);
  std::string label() const;
};

struct RunResult {
  std::vector<std::string> body;  ///< transcript lines before the end record
  std::vector<MonitorRecord> monitors;
  std::optional<StrategyConstants> constants;
  FinalReport final;
  long rounds_played = 0;
  bool forfeited = false;
  bool alice_default_win = false;
  bool strategy_error = false;
  bool illegal_alice = false;
  std::string error;

  bool passed() const;
  std::vector<std::string> failed_monitors() const;
  std::string text() const { return render_transcript(body); }
};

/// Plays cfg.rounds rounds of (Bob, Alice) and writes the transcript if cfg.out is set.
RunResult run_game(const RunConfig& cfg);
/// Same, with an explicit Bob (cfg.bob is only echoed).
RunResult run_game_with(const RunConfig& cfg, BobPolicy& bob);

enum class Integrity { Ok, Io, Parse, Referee, Constants, Regeneration, Checksum };
std::string to_string(Integrity v);

struct MonitorReport {
  Integrity integrity = Integrity::Ok;
  long line = 0;
  std::string detail;
  std::vector<MonitorRecord> monitors;

  bool integrity_ok() const { return integrity == Integrity::Ok; }
  bool monitors_pass() const;
  bool ok() const { return integrity_ok() && monitors_pass(); }
  /// One line per stage/monitor failure plus a verdict line.
  std::string summary() const;
};

MonitorReport verify_transcript_text(std::string_view text);
MonitorReport verify_transcript(const std::filesystem::path& path);

/// The criterion-2 grid: System I (gamma 2, 3, 10) and System II, beta in {1/20, 1/5, 3/10},
/// 13 Bob policies, three twists.
std::vector<RunConfig> acceptance_grid(long rounds);
std::vector<std::string> grid_bob_specs();
std::vector<std::string> grid_twist_specs();

struct BatchConfig {
  RunConfig base;
  long games = 100;
  std::uint64_t seed = 1;
  bool grid = false;
  unsigned workers = 0;  ///< 0 picks the hardware concurrency
  std::optional<std::filesystem::path> transcripts_dir;
};

struct BatchResult {
  std::vector<RunConfig> configs;
  std::vector<RunResult> results;
  std::string tsv;
  bool all_pass = true;
};

BatchResult run_batch(const BatchConfig& cfg);

}  // namespace absgame
