// Acceptance gate: prints one PASS/FAIL line per criterion and exits non-zero if any fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "absgame/harness.hpp"

using namespace absgame;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
}

// ---------------------------------------------------------------- criterion 1

struct Endpoints {
  Rational lo, hi;
};

Endpoints clip(const Rational& c, const Rational& r) {
  return {max(Rational(0), c - r), min(Rational(1), c + r)};
}

bool inside(const Endpoints& in, const Endpoints& out) { return out.lo <= in.lo && in.hi <= out.hi; }

/// Whether some ball of radius s fits in the piece [lo, hi], allowing clipping at 0 and 1.
bool piece_fits(const Rational& lo, const Rational& hi, const Rational& s) {
  if (hi - lo >= s + s) return true;
  if (lo == Rational(0) && hi >= s) return true;
  return hi == Rational(1) && lo <= Rational(1) - s;
}

VerdictReason oracle_bob(RuleSet rules, const GameConfig& cfg, const Ball& prev_bob, const Ball& alice, const Ball& cand) {
  const Endpoints iv = clip(cand.center(), cand.radius());
  const Endpoints a = clip(alice.center(), alice.radius());
  if (rules == RuleSet::Absolute) {
    const Endpoints p = clip(prev_bob.center(), prev_bob.radius());
    const Rational s = cfg.beta * prev_bob.radius();
    const bool left = a.lo > p.lo && piece_fits(p.lo, min(a.lo, p.hi), s);
    const bool right = a.hi < p.hi && piece_fits(max(a.hi, p.lo), p.hi, s);
    if (!left && !right) return VerdictReason::GameOver;
  }
  if (rules == RuleSet::Schmidt) {
    if (cand.radius() != cfg.beta * alice.radius()) return VerdictReason::RadiusMismatch;
    return inside(iv, a) ? VerdictReason::Ok : VerdictReason::NotNested;
  }
  if (cand.radius() < cfg.beta * prev_bob.radius()) return VerdictReason::RadiusTooSmall;
  const Endpoints p = clip(prev_bob.center(), prev_bob.radius());
  if (!inside(iv, p)) return VerdictReason::NotNested;
  if (iv.hi <= a.lo || iv.lo >= a.hi) return VerdictReason::Ok;
  return VerdictReason::NotNested;
}

VerdictReason oracle_alice(RuleSet rules, const GameConfig& cfg, const Ball& bob, const Ball& cand) {
  if (rules == RuleSet::Schmidt) {
    if (cand.radius() != cfg.alpha * bob.radius()) return VerdictReason::RadiusMismatch;
    return inside(clip(cand.center(), cand.radius()), clip(bob.center(), bob.radius())) ? VerdictReason::Ok
                                                                                          : VerdictReason::NotNested;
  }
  return cand.radius() > cfg.beta * bob.radius() ? VerdictReason::RadiusTooLarge : VerdictReason::Ok;
}

class CaseGen {
 public:
  explicit CaseGen(std::uint64_t seed) : rng_(seed) {}

  long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational unit(long den) { return q(pick(0, den), den); }

  /// A radius near `ref`: exactly it, a hair either side, or a random nearby value.
  Rational radius_near(const Rational& ref) {
    switch (pick(0, 4)) {
      case 0:
        return ref;
      case 1:
        return ref + q(1, 100000);
      case 2:
        return max(q(1, 1000000), ref - q(1, 100000));
      case 3:
        return ref * q(pick(1, 40), 20);
      default:
        return q(pick(1, 200), 400);
    }
  }

  /// A center near an interesting endpoint offset by +-r, or uniform.
  Rational center_near(const std::vector<Rational>& marks, const Rational& r) {
    Rational c;
    if (pick(0, 3) == 0 || marks.empty()) {
      c = unit(1000);
    } else {
      const Rational& m = marks[static_cast<std::size_t>(pick(0, static_cast<long>(marks.size()) - 1))];
      const long k = pick(-2, 2);
      c = m + r * Rational(k == 0 ? 0 : (k > 0 ? 1 : -1)) + q(k, 100000) * Rational(pick(0, 1));
    }
    return min(Rational(1), max(Rational(0), c));
  }

 private:
  std::mt19937_64 rng_;
};

Outcome referee_soundness(RuleSet rules, long cases, std::uint64_t seed) {
  CaseGen g(seed);
  long disagreements = 0;
  std::map<std::string, long> seen;
  std::string first_bad;
  for (long i = 0; i < cases; ++i) {
    GameConfig cfg;
    cfg.rules = rules;
    if (rules == RuleSet::Absolute) {
      const Rational betas[] = {q(1, 20), q(1, 5), q(1, 4), q(3, 10), q(1, 3)};
      cfg.beta = betas[g.pick(0, 4)];
      cfg.unsafe_beta_third = true;
    } else {
      cfg.beta = q(g.pick(1, 9), 10);
      cfg.alpha = q(g.pick(1, 9), 10);
    }
    GameState gs(cfg);
    const Ball b0(g.unit(64), q(g.pick(1, 32), 64));
    gs.play_bob(b0);
    const Rational a_r = rules == RuleSet::Schmidt ? cfg.alpha * b0.radius() : cfg.beta * b0.radius() * q(g.pick(1, 4), 4);
    Ball a0(b0.center(), a_r);
    if (rules == RuleSet::Schmidt) {
      const Endpoints p = clip(b0.center(), b0.radius());
      Rational c = p.lo + a_r + (p.hi - p.lo - a_r - a_r) * g.unit(16);
      if (p.hi - p.lo < a_r + a_r) c = b0.center();
      a0 = Ball(min(Rational(1), max(Rational(0), c)), a_r);
    } else {
      a0 = Ball(g.center_near({b0.left(), b0.right(), b0.center()}, Rational(0)), a_r);
    }

    VerdictReason want, got;
    if (g.pick(0, 2) == 0) {
      const Ball cand(g.center_near({b0.left(), b0.right(), b0.center()}, Rational(0)),
                      g.radius_near(rules == RuleSet::Schmidt ? cfg.alpha * b0.radius() : cfg.beta * b0.radius()));
      want = oracle_alice(rules, cfg, b0, cand);
      got = gs.validate_alice_move(cand).reason;
    } else {
      if (!gs.play_alice(a0).accepted()) {
        ++disagreements;
        if (first_bad.empty()) first_bad = "setup Alice ball rejected";
        continue;
      }
      const Rational ref = rules == RuleSet::Schmidt ? cfg.beta * a0.radius() : cfg.beta * b0.radius();
      const Rational r = g.radius_near(ref);
      const Ball cand(g.center_near({b0.left(), b0.right(), a0.left(), a0.right()}, r), r);
      want = oracle_bob(rules, cfg, b0, a0, cand);
      got = gs.validate_bob_move(cand).reason;
    }
    ++seen[to_string(want)];
    if (want != got) {
      ++disagreements;
      if (first_bad.empty()) first_bad = "case " + std::to_string(i) + " oracle " + to_string(want) + " referee " + to_string(got);
    }
  }
  std::ostringstream os;
  os << to_string(rules) << " " << cases << " cases, " << disagreements << " disagreements (";
  bool first = true;
  for (const auto& [k, v] : seen) {
    os << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  os << ")";
  if (!first_bad.empty()) os << " first: " << first_bad;
  return {disagreements == 0 && seen.size() >= 3, os.str()};
}

// ---------------------------------------------------------------- grid helpers

std::string cell_of(const RunConfig& c) { return c.system.str() + " beta=" + c.beta.str() + " twist=" + c.twist; }

long count_failed(const RunResult& r, const std::set<std::string>& names, std::map<std::string, long>& by_name) {
  long n = 0;
  for (const auto& m : r.monitors) {
    if (!m.pass && names.count(m.name)) {
      ++n;
      ++by_name[m.name];
    }
  }
  return n;
}

std::string tally(const std::map<std::string, long>& by_name) {
  std::string s;
  for (const auto& [k, v] : by_name) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s.empty() ? "none" : s;
}

void print(int id, const Outcome& o, double secs) {
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail;
  std::cout << "  [" << static_cast<long>(secs + 0.5) << "s]" << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks for the absolute-game simulator"};
  std::string workdir = (std::filesystem::temp_directory_path() / "absgame_acceptance").string();
  long rounds = 300;
  long referee_cases = 10000;
  unsigned workers = 0;
  std::vector<int> only;
  app.add_option("--workdir", workdir, "Directory for grid transcripts");
  app.add_option("--rounds", rounds, "Rounds per grid game")->capture_default_str();
  app.add_option("--referee-cases", referee_cases, "Random legality cases per rule set")->capture_default_str();
  app.add_option("--workers", workers, "Parallel games (0 = hardware concurrency)");
  app.add_option("--only", only, "Run only these criteria");
  CLI11_PARSE(app, argc, argv);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  auto wanted = [&](int id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };

  bool all = true;
  using clock = std::chrono::steady_clock;
  auto timed = [&](int id, const std::function<Outcome()>& fn) {
    if (!wanted(id)) return;
    const auto t0 = clock::now();
    const Outcome o = fn();
    print(id, o, std::chrono::duration<double>(clock::now() - t0).count());
    all = all && o.pass;
  };

  timed(1, [&] {
    const Outcome a = referee_soundness(RuleSet::Absolute, referee_cases, 1);
    const Outcome s = referee_soundness(RuleSet::Schmidt, referee_cases, 2);
    return Outcome{a.pass && s.pass, a.detail + "; " + s.detail};
  });

  std::vector<RunConfig> grid;
  std::vector<RunResult> results;
  std::vector<std::filesystem::path> paths;
  double grid_secs = 0;
  const bool need_grid = wanted(2) || wanted(3) || wanted(4) || wanted(9);
  if (need_grid) {
    std::filesystem::create_directories(workdir);
    const auto t0 = clock::now();
    BatchConfig bc;
    bc.base.rounds = rounds;
    bc.grid = true;
    bc.workers = workers;
    bc.transcripts_dir = workdir;
    BatchResult br = run_batch(bc);
    grid = std::move(br.configs);
    results = std::move(br.results);
    for (std::size_t i = 0; i < grid.size(); ++i) paths.push_back(std::filesystem::path(workdir) / ("game_" + std::to_string(i) + ".txt"));
    write_file_atomic(std::filesystem::path(workdir) / "grid.tsv", br.tsv);
    grid_secs = std::chrono::duration<double>(clock::now() - t0).count();
  }

  timed(2, [&] {
    long illegal = 0, errors = 0, incomplete = 0;
    std::string first;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const RunResult& r = results[i];
      illegal += r.illegal_alice;
      errors += r.strategy_error;
      const bool complete = r.rounds_played == rounds || r.alice_default_win;
      incomplete += !complete;
      if ((r.illegal_alice || r.strategy_error || !complete) && first.empty()) {
        first = grid[i].label() + ": " + (r.error.empty() ? "stopped at round " + std::to_string(r.rounds_played) : r.error);
      }
    }
    std::ostringstream os;
    os << grid.size() << " games x " << rounds << " rounds (grid " << static_cast<long>(grid_secs + 0.5)
       << "s): illegal Alice moves=" << illegal << " strategy errors=" << errors << " incomplete=" << incomplete;
    if (!first.empty()) os << " first: " << first;
    return Outcome{illegal == 0 && errors == 0 && incomplete == 0 && !grid.empty(), os.str()};
  });

  timed(3, [&] {
    const std::set<std::string> names{"trichotomy", "statement2", "statement3", "lemma6"};
    std::map<std::string, long> by_name;
    long total = 0, games = 0;
    for (const auto& r : results) {
      const long n = count_failed(r, names, by_name);
      total += n;
      games += n > 0;
    }
    std::ostringstream os;
    os << total << " hypothesis violations in " << games << "/" << results.size() << " games (" << tally(by_name) << ")";
    return Outcome{total == 0 && !results.empty(), os.str()};
  });

  timed(4, [&] {
    const std::set<std::string> names{"separation", "final_witness"};
    const std::set<std::string> hypotheses{"trichotomy", "statement2", "statement3", "lemma6"};
    std::map<std::string, long> by_name, aux_names;
    long total = 0;
    Rational worst_ratio;
    bool have = false;
    for (const auto& r : results) {
      total += count_failed(r, names, by_name);
      for (const auto& m : r.monitors) {
        if (!m.pass && !names.count(m.name) && !hypotheses.count(m.name)) ++aux_names[m.name];
      }
      for (const auto& m : r.monitors) {
        if (m.name != "separation" || m.bound.sign() <= 0) continue;
        const Rational ratio = m.value / m.bound;
        if (!have || ratio < worst_ratio) worst_ratio = ratio;
        have = true;
      }
    }
    std::ostringstream os;
    os << total << " separation/witness violations (" << tally(by_name) << ")";
    if (have) os << ", min margin/delta=" << worst_ratio.to_double();
    os << "; other monitors failing: " << tally(aux_names);
    return Outcome{total == 0 && have, os.str()};
  });

  timed(5, [&] {
    long violations = 0, games = 0, errors = 0;
    Integer worst_cf = 0;
    Rational cap;
    for (int seed = 1; seed <= 10; ++seed) {
      RunConfig c;
      c.system = SystemSpec::gauss();
      c.beta = q(1, 5);
      c.rounds = 200;
      c.bob = "random:" + std::to_string(seed);
      c.twist = "const:0/1";
      const RunResult r = run_game(c);
      ++games;
      if (r.strategy_error || !r.constants || !r.final.cf_max) {
        ++errors;
        continue;
      }
      cap = Rational(Integer(r.constants->delta.reciprocal().ceil() + 1));
      for (const Integer& a : r.final.cf_prefix) {
        if (Rational(a) > cap) ++violations;
        worst_cf = std::max(worst_cf, a);
      }
    }
    std::ostringstream os;
    os << games << " games, largest partial quotient " << worst_cf.get_str() << " vs cap " << cap.to_double()
       << ", violations=" << violations << " errors=" << errors;
    return Outcome{violations == 0 && errors == 0, os.str()};
  });

  timed(6, [&] {
    const OracleTable t = distortion_oracle(12, 1000, 1, 2);
    long violations = 0;
    for (const auto& r : t.rows) violations += r.violations;
    const Rational at_bound = distortion_ratio(SystemSpec::gauss(), 1, q(1, 2), Rational(1));
    const bool attained = at_bound == Rational(4);
    std::ostringstream os;
    os << t.rows.size() << " depths, " << violations << " ratios outside [1/4,4], min ratio " << t.overall_min().str()
       << ", depth-1 endpoint ratio " << at_bound.str();
    return Outcome{t.passed() && violations == 0 && attained && t.rows.size() == 12, os.str()};
  });

  timed(7, [&] {
    const OracleTable t = expansion_oracle(15);
    const Rational& R = default_R();
    long below = 0;
    for (const auto& r : t.rows) below += r.min_ratio < R;
    std::ostringstream os;
    os << t.rows.size() << " depths, table min " << t.overall_min().str() << " (" << t.overall_min().to_double()
       << ") vs R " << R.str() << ", rows below R=" << below;
    return Outcome{t.passed() && below == 0 && t.rows.size() == 15, os.str()};
  });

  timed(8, [&] {
    const OracleTable c = cylinder_oracle(6, 4);
    const OracleTable f = fibonacci_oracle(6, 4);
    long cv = 0, fv = 0, cylinders = 0;
    for (const auto& r : c.rows) cv += r.violations;
    for (const auto& r : f.rows) fv += r.violations;
    if (!c.rows.empty()) cylinders = c.rows.back().cylinders;
    std::ostringstream os;
    os << "depth-6 cylinders " << cylinders << ", diameter violations " << cv << ", q_n < F_n violations " << fv;
    return Outcome{c.passed() && f.passed() && cylinders == 4096, os.str()};
  });

  timed(9, [&] {
    std::vector<MonitorReport> reps(paths.size());
    parallel_for(paths.size(), workers, [&](std::size_t i) { reps[i] = verify_transcript(paths[i]); });
    long bad = 0, monitor_disagree = 0;
    std::string first;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (!reps[i].integrity_ok()) {
        ++bad;
        if (first.empty()) first = paths[i].filename().string() + ": " + reps[i].summary();
      }
      if (reps[i].monitors_pass() != results[i].passed()) ++monitor_disagree;
    }

    std::map<std::string, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < grid.size(); ++i) cells[cell_of(grid[i])].push_back(i);
    struct Flip {
      std::size_t game;
      std::size_t byte;
      int bit;
    };
    std::vector<Flip> flips;
    std::mt19937_64 rng(9);
    std::vector<std::string> texts(grid.size());
    for (const auto& [cell, idx] : cells) {
      for (int k = 0; k < 10; ++k) {
        const std::size_t g = idx[static_cast<std::size_t>(k) % idx.size()];
        if (texts[g].empty()) texts[g] = read_file(paths[g]);
        const std::size_t byte = std::uniform_int_distribution<std::size_t>(0, texts[g].size() - 1)(rng);
        flips.push_back({g, byte, static_cast<int>(rng() % 8)});
      }
    }
    std::vector<Integrity> verdicts(flips.size());
    parallel_for(flips.size(), workers, [&](std::size_t i) {
      std::string t = texts[flips[i].game];
      t[flips[i].byte] = static_cast<char>(t[flips[i].byte] ^ (1 << flips[i].bit));
      verdicts[i] = verify_transcript_text(t).integrity;
    });
    std::map<std::string, long> named;
    long undetected = 0;
    for (Integrity v : verdicts) {
      if (v == Integrity::Ok) ++undetected;
      ++named[to_string(v)];
    }
    std::ostringstream os;
    os << paths.size() << " transcripts, integrity failures " << bad << ", monitor verdict disagreements "
       << monitor_disagree << "; " << flips.size() << " bit flips over " << cells.size() << " cells, undetected "
       << undetected << " (" << tally(named) << ")";
    if (!first.empty()) os << " first: " << first;
    return Outcome{bad == 0 && monitor_disagree == 0 && undetected == 0 && !paths.empty(), os.str()};
  });

  std::cout << "acceptance: " << (all ? "PASS" : "FAIL") << std::endl;
  return all ? 0 : 1;
}
