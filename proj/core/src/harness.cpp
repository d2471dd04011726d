#include "absgame/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

namespace absgame {

namespace {

Record move_record(long round, Player p, const Ball& b) {
  Record r("move");
  r.add("round", round).add("player", to_string(p)).add("center", b.center()).add("radius", b.radius());
  return r;
}

const Rational& R_for(const SystemSpec& sys) {
  static const Rational zero(0);
  return sys.is_gauss() ? default_R() : zero;
}

std::string approx(const Rational& x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x.to_double());
  return buf;
}

}  // namespace

void RunConfig::validate() const {
  GameConfig g;
  g.beta = beta;
  g.max_rounds = rounds;
  g.unsafe_beta_third = unsafe_beta_third;
  g.validate();
  validate_bob_spec(bob);
  TwistSequence::parse(twist);
}

Record RunConfig::record() const {
  Record r("config");
  r.add("system", system.str()).add("beta", beta).add("rounds", rounds).add("bob", bob);
  r.add("twist", TwistSequence::parse(twist).str()).add("monitors", to_string(monitors));
  r.add("unsafe_beta_third", unsafe_beta_third ? 1L : 0L);
  return r;
}

RunConfig RunConfig::from_record(const Record& r) {
  if (r.kind != "config") throw ParseError("expected a config record");
  RunConfig c;
  c.system = SystemSpec::parse(r.at("system"));
  c.beta = parse_pq(r.at("beta"));
  try {
    c.rounds = std::stol(r.at("rounds"));
  } catch (const std::exception&) {
    throw ParseError("bad rounds '" + r.at("rounds") + "'");
  }
  c.bob = r.at("bob");
  c.twist = r.at("twist");
  c.monitors = parse_monitor_mode(r.at("monitors"));
  const std::string& u = r.at("unsafe_beta_third");
  if (u != "0" && u != "1") throw ParseError("bad unsafe_beta_third '" + u + "'");
  c.unsafe_beta_third = u == "1";
  if (r.fields.size() != 7) throw ParseError("config record has unexpected fields");
  c.validate();
  return c;
}

std::string RunConfig::label() const {
  return system.str() + " beta=" + beta.str() + " bob=" + bob + " twist=" + twist;
}

bool RunResult::passed() const {
  if (strategy_error || illegal_alice) return false;
  return std::all_of(monitors.begin(), monitors.end(), [](const MonitorRecord& m) { return m.pass; });
}

std::vector<std::string> RunResult::failed_monitors() const {
  std::vector<std::string> out;
  for (const auto& m : monitors) {
    if (!m.pass && std::find(out.begin(), out.end(), m.name) == out.end()) out.push_back(m.name);
  }
  if (strategy_error) out.insert(out.begin(), "strategy_error");
  if (illegal_alice) out.insert(out.begin(), "illegal_alice");
  return out;
}

RunResult run_game(const RunConfig& cfg) {
  cfg.validate();
  auto bob = make_bob_policy(cfg.bob, cfg.system, TwistSequence::parse(cfg.twist));
  return run_game_with(cfg, *bob);
}

RunResult run_game_with(const RunConfig& cfg, BobPolicy& bob) {
  cfg.validate();
  RunResult res;
  GameConfig gc;
  gc.beta = cfg.beta;
  gc.max_rounds = cfg.rounds;
  gc.unsafe_beta_third = cfg.unsafe_beta_third;
  GameState gs(gc);
  AliceStrategy alice(cfg.system, cfg.beta, TwistSequence::parse(cfg.twist), R_for(cfg.system), cfg.monitors);

  res.body.emplace_back(kTranscriptHeader);
  res.body.push_back(cfg.record().line());
  auto flush = [&] {
    for (const Record& r : alice.take_records()) res.body.push_back(r.line());
  };

  for (long round = 1; round <= cfg.rounds; ++round) {
    const auto ball = bob.next(gs);
    if (!ball || !gs.play_bob(*ball).accepted()) {
      res.forfeited = true;
      res.body.push_back(Record("forfeit").add("round", round).line());
      break;
    }
    res.body.push_back(move_record(round, Player::Bob, *ball).line());
    AliceMove mv{*ball, 0, LevelType::I, "", "", 0};
    try {
      mv = alice.respond(gs);
    } catch (const std::exception& e) {
      flush();
      res.strategy_error = true;
      res.error = e.what();
      res.body.push_back(Record("error").add("round", round).add("what", e.what()).line());
      break;
    }
    flush();
    const Verdict v = gs.play_alice(mv.ball);
    if (!v.accepted()) {
      res.illegal_alice = true;
      res.error = to_string(v.reason) + ": " + v.detail;
      res.body.push_back(Record("error").add("round", round).add("what", to_string(v.reason)).line());
      break;
    }
    Record r = move_record(round, Player::Alice, mv.ball);
    r.add("level", mv.level).add("type", to_string(mv.type)).add("case", mv.phase).add("stars", mv.pending);
    r.add("reason", mv.reason);
    res.body.push_back(r.line());
    res.rounds_played = round;
    if (gs.alice_won_by_default()) {
      res.alice_default_win = true;
      res.body.push_back(Record("default").add("round", round).line());
      break;
    }
  }
  if (!res.strategy_error) {
    try {
      res.final = alice.finish(gs);
    } catch (const std::exception& e) {
      res.strategy_error = true;
      res.error = e.what();
      res.body.push_back(Record("error").add("round", res.rounds_played).add("what", e.what()).line());
    }
  }
  flush();
  res.monitors = alice.monitors();
  if (alice.started()) res.constants = alice.constants();
  if (cfg.out) write_file_atomic(*cfg.out, res.text());
  return res;
}

std::string to_string(Integrity v) {
  switch (v) {
    case Integrity::Ok:
      return "Ok";
    case Integrity::Io:
      return "IoError";
    case Integrity::Parse:
      return "ParseError";
    case Integrity::Referee:
      return "RefereeReject";
    case Integrity::Constants:
      return "ConstantsMismatch";
    case Integrity::Regeneration:
      return "RegenerationMismatch";
    case Integrity::Checksum:
      return "ChecksumMismatch";
  }
  return "?";
}

bool MonitorReport::monitors_pass() const {
  return std::all_of(monitors.begin(), monitors.end(), [](const MonitorRecord& m) { return m.pass; });
}

std::string MonitorReport::summary() const {
  std::ostringstream os;
  if (!integrity_ok()) {
    os << "integrity FAIL " << to_string(integrity);
    if (line > 0) os << " at line " << line;
    os << ": " << detail << '\n';
  } else {
    os << "integrity ok\n";
  }
  long failed = 0;
  for (const auto& m : monitors) {
    if (m.pass) continue;
    ++failed;
    os << "monitor FAIL " << m.name << " level=" << m.level << " value=" << m.value.str() << " bound=" << m.bound.str()
       << '\n';
  }
  os << "monitors " << (monitors.size() - static_cast<std::size_t>(failed)) << "/" << monitors.size() << " pass\n";
  os << "verdict " << (ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

namespace {

MonitorReport fail(Integrity v, long line, std::string detail) {
  MonitorReport r;
  r.integrity = v;
  r.line = line;
  r.detail = std::move(detail);
  return r;
}

MonitorRecord monitor_from(const Record& r) {
  MonitorRecord m;
  m.name = r.at("name");
  m.level = std::stol(r.at("level"));
  const std::string& st = r.at("status");
  if (st != "pass" && st != "fail") throw ParseError("bad monitor status '" + st + "'");
  m.pass = st == "pass";
  m.value = parse_pq(r.at("value"));
  m.bound = parse_pq(r.at("bound"));
  return m;
}

}  // namespace

MonitorReport verify_transcript_text(std::string_view text) {
  ParsedTranscript t;
  try {
    t = parse_transcript(text);
  } catch (const TranscriptError& e) {
    return fail(Integrity::Parse, e.line(), e.what());
  }
  RunConfig cfg;
  try {
    cfg = RunConfig::from_record(t.records.front());
  } catch (const std::exception& e) {
    return fail(Integrity::Parse, 2, std::string("config: ") + e.what());
  }

  // referee replay
  GameConfig gc;
  gc.beta = cfg.beta;
  gc.max_rounds = cfg.rounds;
  gc.unsafe_beta_third = cfg.unsafe_beta_third;
  GameState gs(gc);
  std::optional<Ball> first_bob;
  const Record* constants = nullptr;
  const Record* final_rec = nullptr;
  std::vector<MonitorRecord> monitors;
  for (std::size_t i = 0; i < t.records.size(); ++i) {
    const Record& r = t.records[i];
    const long lineno = static_cast<long>(i + 2);
    try {
      if (r.kind == "constants") constants = &r;
      if (r.kind == "final") final_rec = &r;
      if (r.kind == "monitor") monitors.push_back(monitor_from(r));
      if (r.kind != "move") continue;
      const Ball b(parse_pq(r.at("center")), parse_pq(r.at("radius")));
      const bool is_bob = r.at("player") == "bob";
      const Verdict v = is_bob ? gs.play_bob(b) : gs.play_alice(b);
      if (!v.accepted()) return fail(Integrity::Referee, lineno, to_string(v.reason) + ": " + v.detail);
      if (std::stol(r.at("round")) != gs.round()) {
        return fail(Integrity::Referee, lineno, "round index " + r.at("round") + " != " + std::to_string(gs.round()));
      }
      if (is_bob && !first_bob) first_bob = b;
    } catch (const std::exception& e) {
      return fail(Integrity::Parse, lineno, e.what());
    }
  }

  // constants
  if (first_bob) {
    if (!constants) return fail(Integrity::Constants, 0, "constants record missing");
    const StrategyConstants c = derive_constants(cfg.system, cfg.beta, first_bob->diameter(), R_for(cfg.system));
    const std::pair<const char*, std::string> expect[] = {
        {"rho1_1", c.rho1_1.str()}, {"rho", c.rho.str()},        {"rho_sharp", c.rho_sharp.str()},
        {"lambda", std::to_string(c.lambda)}, {"clog", std::to_string(c.clog)}, {"clog2", std::to_string(c.clog_plus2)},
        {"R", c.R.str()},          {"delta", c.delta.str()},    {"delta_final", c.delta_final.str()}};
    for (const auto& [key, val] : expect) {
      const std::string* got = constants->find(key);
      if (!got || *got != val) {
        return fail(Integrity::Constants, 0, std::string(key) + " = " + (got ? *got : "<missing>") + ", expected " + val);
      }
    }
  } else if (constants) {
    return fail(Integrity::Constants, 0, "constants record without any Bob move");
  }

  // regeneration
  RunConfig regen = cfg;
  regen.out.reset();
  ReplayBob replay(bob_balls(t), "transcript");
  const RunResult rr = run_game_with(regen, replay);
  const std::size_t common = std::min(rr.body.size(), t.body.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (rr.body[i] != t.body[i]) {
      return fail(Integrity::Regeneration, static_cast<long>(i + 1), "expected '" + rr.body[i].substr(0, 160) + "'");
    }
  }
  if (rr.body.size() != t.body.size()) {
    return fail(Integrity::Regeneration, static_cast<long>(common + 1),
                "regenerated " + std::to_string(rr.body.size()) + " lines, file has " + std::to_string(t.body.size()));
  }

  MonitorReport rep;
  rep.monitors = std::move(monitors);

  // independent witness recheck
  if (final_rec && first_bob && constants) {
    try {
      const std::string& ws = final_rec->at("witness");
      const Rational w = parse_pq(ws);
      const Interval deepest = gs.last_bob()->interval();
      const long N = std::stol(final_rec->at("N"));
      const long depth = std::stol(final_rec->at("depth"));
      const TwistSequence twist = TwistSequence::parse(cfg.twist);
      const Rational delta = parse_pq(constants->at("delta"));
      const Rational bound = delta / Rational(2) - Rational(2) * twist.approximation_error();
      bool ok = w == deepest.midpoint();
      Rational worst = bound;
      Rational x = w;
      for (long n = 1; n <= depth; ++n) {
        x = apply_map(cfg.system, x);
        if (n < N) continue;
        const Rational d = distance(x, twist.eval(n, w));
        if (d < worst) worst = d;
        if (d < bound) ok = false;
      }
      rep.monitors.push_back(MonitorRecord{"witness_recheck", depth, ok, worst, bound});
    } catch (const std::exception& e) {
      return fail(Integrity::Parse, 0, std::string("final record: ") + e.what());
    }
  }

  // checksum
  const std::string expected_end = end_line(t.body);
  if (expected_end != t.end.line()) {
    return fail(Integrity::Checksum, static_cast<long>(t.body.size() + 1), "expected '" + expected_end + "'");
  }
  return rep;
}

MonitorReport verify_transcript(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    return fail(Integrity::Io, 0, e.what());
  }
  return verify_transcript_text(text);
}

std::vector<std::string> grid_bob_specs() {
  std::vector<std::string> out;
  for (int s = 1; s <= 10; ++s) out.push_back("random:" + std::to_string(s));
  out.emplace_back("chaser");
  out.emplace_back("extremal:left");
  out.emplace_back("extremal:right");
  return out;
}

std::vector<std::string> grid_twist_specs() { return {"const:0/1", "identity", "affine:1/2"}; }

std::vector<RunConfig> acceptance_grid(long rounds) {
  std::vector<SystemSpec> systems{SystemSpec::beta(2), SystemSpec::beta(3), SystemSpec::beta(10), SystemSpec::gauss()};
  const Rational betas[] = {Rational(1, 20), Rational(1, 5), Rational(3, 10)};
  std::vector<RunConfig> out;
  for (const auto& sys : systems) {
    for (const auto& b : betas) {
      for (const auto& tw : grid_twist_specs()) {
        for (const auto& bob : grid_bob_specs()) {
          RunConfig c;
          c.system = sys;
          c.beta = b;
          c.rounds = rounds;
          c.bob = bob;
          c.twist = tw;
          out.push_back(c);
        }
      }
    }
  }
  return out;
}

BatchResult run_batch(const BatchConfig& cfg) {
  BatchResult out;
  if (cfg.grid) {
    out.configs = acceptance_grid(cfg.base.rounds);
    for (auto& c : out.configs) c.monitors = cfg.base.monitors;
  } else {
    for (long i = 0; i < cfg.games; ++i) {
      RunConfig c = cfg.base;
      if (c.bob.starts_with("random:")) c.bob = "random:" + std::to_string(cfg.seed + static_cast<std::uint64_t>(i));
      out.configs.push_back(c);
    }
  }
  for (auto& c : out.configs) {
    c.validate();
    c.out.reset();
  }
  out.results.resize(out.configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < out.configs.size(); i = next++) {
      RunConfig c = out.configs[i];
      if (cfg.transcripts_dir) c.out = *cfg.transcripts_dir / ("game_" + std::to_string(i) + ".txt");
      out.results[i] = run_game(c);
    }
  };
  unsigned n = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(1, out.configs.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::ostringstream os;
  os << "game\tsystem\tbeta\tbob\ttwist\trounds\tplayed\tstatus\tfailed\tdepth\tmin_sep\tdelta\n";
  for (std::size_t i = 0; i < out.configs.size(); ++i) {
    const RunConfig& c = out.configs[i];
    const RunResult& r = out.results[i];
    std::optional<Rational> min_sep;
    for (const auto& m : r.monitors) {
      if (m.name == "separation" && (!min_sep || m.value < *min_sep)) min_sep = m.value;
    }
    const auto failed = r.failed_monitors();
    std::string failed_s;
    for (const auto& f : failed) failed_s += (failed_s.empty() ? "" : ",") + f;
    os << i << '\t' << c.system.str() << '\t' << c.beta.str() << '\t' << c.bob << '\t' << c.twist << '\t' << c.rounds
       << '\t' << r.rounds_played << '\t' << (r.passed() ? "pass" : "fail") << '\t'
       << (failed_s.empty() ? "-" : failed_s) << '\t' << r.final.depth << '\t' << (min_sep ? approx(*min_sep) : "-")
       << '\t' << (r.constants ? approx(r.constants->delta) : "-") << '\n';
    if (!r.passed()) out.all_pass = false;
  }
  out.tsv = os.str();
  return out;
}

}  // namespace absgame
