#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "absgame/harness.hpp"

namespace {

struct RunFlags {
  std::string system = "beta:2";
  std::string beta = "1/4";
  long rounds = 300;
  std::string bob = "random:1";
  std::string twist = "const:0/1";
  std::string out;
  std::string monitors = "all";
  bool unsafe = false;
};

void add_run_flags(CLI::App* app, RunFlags& f) {
  app->add_option("--system", f.system, "beta:<gamma> or gauss")->capture_default_str();
  app->add_option("--beta", f.beta, "Game parameter beta as p/q")->capture_default_str();
  app->add_option("--rounds", f.rounds, "Number of (Bob, Alice) rounds")->capture_default_str();
  app->add_option("--bob", f.bob, "random:<seed>|chaser|extremal:left|extremal:right|replay:<path>")->capture_default_str();
  app->add_option("--twist", f.twist, "const:<p/q>|identity|affine:<L>")->capture_default_str();
  app->add_option("--monitors", f.monitors, "all|minimal")->capture_default_str();
  app->add_flag("--unsafe-beta-third", f.unsafe, "Allow beta = 1/3");
}

absgame::RunConfig to_config(const RunFlags& f) {
  absgame::RunConfig c;
  c.system = absgame::SystemSpec::parse(f.system);
  c.beta = absgame::Rational::parse(f.beta);
  c.rounds = f.rounds;
  c.bob = f.bob;
  c.twist = f.twist;
  c.monitors = absgame::parse_monitor_mode(f.monitors);
  c.unsafe_beta_third = f.unsafe;
  c.validate();
  return c;
}

int cmd_run(const RunFlags& f) {
  absgame::RunConfig cfg = to_config(f);
  if (!f.out.empty()) cfg.out = f.out;
  const absgame::RunResult r = absgame::run_game(cfg);
  if (f.out.empty()) std::cout << r.text();
  std::cerr << cfg.label() << ": played " << r.rounds_played << " rounds, depth " << r.final.depth;
  if (r.forfeited) std::cerr << ", Bob forfeited";
  if (r.alice_default_win) std::cerr << ", Alice won by default";
  std::cerr << '\n';
  if (!r.error.empty()) std::cerr << "error: " << r.error << '\n';
  for (const auto& name : r.failed_monitors()) std::cerr << "FAIL " << name << '\n';
  std::cerr << (r.passed() ? "PASS" : "FAIL") << '\n';
  return r.passed() ? 0 : 1;
}

int cmd_verify(const std::string& path) {
  const absgame::MonitorReport rep = absgame::verify_transcript(path);
  std::cout << rep.summary();
  return rep.ok() ? 0 : 1;
}

int cmd_oracle(const std::string& kind, long depth, const std::string& out) {
  const absgame::OracleTable t = absgame::run_oracle(absgame::parse_oracle_kind(kind), depth);
  const std::string tsv = absgame::to_tsv(t);
  if (out.empty()) {
    std::cout << tsv;
  } else {
    absgame::write_file_atomic(out, tsv);
  }
  if (t.kind == absgame::OracleKind::Expansion) std::cerr << "R = " << absgame::certified_R(t).str() << '\n';
  std::cerr << (t.passed() ? "PASS" : "FAIL") << '\n';
  return t.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simulator and verifier for the absolute game on x -> gamma x mod 1 and the Gauss map"};
  app.require_subcommand(1);

  RunFlags run_flags;
  auto* run = app.add_subcommand("run", "Play one game and emit its transcript");
  add_run_flags(run, run_flags);
  run->add_option("--out", run_flags.out, "Transcript path (stdout if omitted)");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Re-validate a transcript");
  verify->add_option("transcript", verify_path, "Transcript path")->required();

  std::string kind = "expansion";
  long depth = 15;
  std::string oracle_out;
  auto* oracle = app.add_subcommand("oracle", "Emit a brute-force oracle table");
  oracle->add_option("--kind", kind, "expansion|distortion|cylinders|fibonacci")->capture_default_str();
  oracle->add_option("--depth", depth, "Maximum depth")->capture_default_str();
  oracle->add_option("--out", oracle_out, "TSV path (stdout if omitted)");

  RunFlags batch_flags;
  long games = 100;
  std::uint64_t seed = 1;
  bool grid = false;
  unsigned workers = 0;
  std::string transcripts;
  auto* batch = app.add_subcommand("batch", "Play many games and write an aggregate TSV report");
  add_run_flags(batch, batch_flags);
  batch->add_option("--out", batch_flags.out, "Report path (stdout if omitted)");
  batch->add_option("--games", games, "Number of games (seeds seed..seed+games-1 for random Bob)")->capture_default_str();
  batch->add_option("--seed", seed, "First seed")->capture_default_str();
  batch->add_flag("--grid", grid, "Run the full acceptance grid instead");
  batch->add_option("--workers", workers, "Parallel games (0 = hardware concurrency)");
  batch->add_option("--transcripts", transcripts, "Directory for per-game transcripts");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(run_flags);
    if (*verify) return cmd_verify(verify_path);
    if (*oracle) return cmd_oracle(kind, depth, oracle_out);
    if (*batch) {
      absgame::BatchConfig bc;
      bc.base = to_config(batch_flags);
      bc.games = games;
      bc.seed = seed;
      bc.grid = grid;
      bc.workers = workers;
      if (!transcripts.empty()) bc.transcripts_dir = transcripts;
      const absgame::BatchResult br = absgame::run_batch(bc);
      if (batch_flags.out.empty()) {
        std::cout << br.tsv;
      } else {
        absgame::write_file_atomic(batch_flags.out, br.tsv);
      }
      std::cerr << (br.all_pass ? "PASS" : "FAIL") << '\n';
      return br.all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
