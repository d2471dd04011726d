#include "absgame/strategy.hpp"

#include <algorithm>

namespace absgame {

namespace {

const Rational kZero(0), kOne(1), kTwo(2);

std::string bool_status(bool pass) { return pass ? "pass" : "fail"; }

}  // namespace

std::string to_string(LevelType t) {
  switch (t) {
    case LevelType::I:
      return "I";
    case LevelType::II:
      return "II";
    case LevelType::III:
      return "III";
  }
  return "?";
}

MonitorMode parse_monitor_mode(std::string_view text) {
  if (text == "all") return MonitorMode::All;
  if (text == "minimal") return MonitorMode::Minimal;
  throw ParseError("unknown monitor mode '" + std::string(text) + "' (expected all or minimal)");
}

std::string to_string(MonitorMode m) { return m == MonitorMode::All ? "all" : "minimal"; }

Record MonitorRecord::record() const {
  Record r("monitor");
  r.add("name", name).add("level", level).add("status", bool_status(pass)).add("value", value).add("bound", bound);
  return r;
}

std::vector<Rational> star_vertices(const SystemSpec& sys, long m, const Rational& target, const Interval& window) {
  return branch_preimages(sys, m, target, window).points;
}

AliceStrategy::AliceStrategy(SystemSpec sys, Rational beta, TwistSequence twist, Rational oracle_R, MonitorMode mode)
    : sys_(sys), beta_(std::move(beta)), twist_(std::move(twist)), oracle_R_(std::move(oracle_R)), mode_(mode) {
  branches_.push_back(Branch::identity(sys_));
}

bool AliceStrategy::all_monitors_pass() const {
  return std::all_of(monitors_.begin(), monitors_.end(), [](const MonitorRecord& m) { return m.pass; });
}

std::vector<Record> AliceStrategy::take_records() {
  std::vector<Record> out;
  out.swap(pending_records_);
  return out;
}

void AliceStrategy::monitor(std::string name, long level, bool pass, const Rational& value, const Rational& bound,
                            bool minimal) {
  if (mode_ == MonitorMode::Minimal && !minimal) return;
  MonitorRecord m{std::move(name), level, pass, value, bound};
  pending_records_.push_back(m.record());
  monitors_.push_back(std::move(m));
}

bool AliceStrategy::ensure_branch(long m) {
  const Interval iv = cur_->interval();
  while (static_cast<long>(branches_.size()) <= m) {
    const Interval img = branches_.back().image(iv);
    if (has_interior_first_order_vertex(sys_, img)) return false;
    branches_.push_back(branches_.back().extend(first_digit(sys_, img)));
  }
  return true;
}

Interval AliceStrategy::image(long m) const { return branch(m).image(cur_->interval()); }

Rational AliceStrategy::reach() const { return beta_ * cur_->radius(); }

Rational AliceStrategy::median(std::vector<Rational> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts[(pts.size() - 1) / 2];
}

std::vector<Rational> AliceStrategy::stars_for(long m, bool reach_only, bool* unresolved) {
  std::vector<Branch> bs;
  if (ensure_branch(m)) {
    bs.push_back(branch(m));
  } else {
    const Interval img = image(m - 1);
    const FirstOrderVertices fv = first_order_vertices(sys_, img);
    if (fv.infinite || fv.count != 1 || !img.interior_contains(fv.leftmost)) {
      if (unresolved) *unresolved = true;
      return {};
    }
    const Branch& base = branch(m - 1);
    if (sys_.is_beta()) {
      const Integer j = (fv.leftmost * Rational(sys_.gamma)).floor();
      bs.push_back(base.extend(j - 1));
      bs.push_back(base.extend(j));
    } else {
      const Integer k = fv.leftmost.reciprocal().floor();
      bs.push_back(base.extend(k));
      bs.push_back(base.extend(k - 1));
    }
  }
  const Rational& y = targets_[static_cast<std::size_t>(m)];
  const Interval iv = cur_->interval();
  const Rational r = reach();
  std::vector<Rational> out;
  for (const Branch& b : bs) {
    std::vector<Rational> zs{b.inverse(y)};
    if (y.is_zero()) zs.push_back(b.inverse(kOne));
    for (const Rational& z : zs) {
      if (reach_only ? iv.distance_to(z) < r : iv.contains(z)) out.push_back(z);
    }
  }
  return out;
}

std::vector<Rational> AliceStrategy::stars_within_reach(long m_lo, long m_hi) {
  std::vector<Rational> out;
  for (long m = std::max(1L, m_lo); m <= m_hi; ++m) {
    auto s = stars_for(m, true, nullptr);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

std::vector<Rational> AliceStrategy::star_set(const Ball& b) {
  std::vector<Rational> out;
  const Interval iv = b.interval();
  for (long m = std::max(1L, J_ + 1); m < n_ && m < static_cast<long>(branches_.size()); ++m) {
    const Rational& y = targets_[static_cast<std::size_t>(m)];
    std::vector<Rational> zs{branch(m).inverse(y)};
    if (y.is_zero()) zs.push_back(branch(m).inverse(kOne));
    for (const Rational& z : zs) {
      if (iv.contains(z)) out.push_back(z);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rational> AliceStrategy::interior_vertices_n() {
  const long m = n_ - 1;
  const Interval img = image(m);
  if (!has_interior_first_order_vertex(sys_, img)) return {};
  const Branch& b = branch(m);
  const FirstOrderVertices fv = first_order_vertices(sys_, img);
  if (fv.infinite) return {b.inverse(kZero)};
  std::vector<Rational> out;
  if (!fv.sample.empty()) {
    for (const Rational& v : fv.sample) {
      if (img.interior_contains(v)) out.push_back(b.inverse(v));
    }
    return out;
  }
  if (sys_.is_beta()) {
    const Rational g(sys_.gamma);
    const Integer j = ((fv.leftmost * g).floor() + (fv.rightmost * g).floor()) / 2;
    out.push_back(b.inverse(Rational(j, sys_.gamma)));
  } else {
    const Integer k = (fv.leftmost.reciprocal().floor() + fv.rightmost.reciprocal().floor()) / 2;
    out.push_back(b.inverse(Rational(Integer(1), k)));
  }
  return out;
}

Rational AliceStrategy::margin(long m, const Interval& iv) const {
  const Rational& y = targets_[static_cast<std::size_t>(m)];
  const Branch& b = branch(m);
  Rational d = b.image(iv).distance_to(y);
  const Interval cyl = b.cylinder();
  if (iv.contains(cyl.lo) || iv.contains(cyl.hi)) d = min(d, y.abs());
  return d;
}

AliceMove AliceStrategy::make_move(const Rational& center, std::string reason, long pending) {
  ++moves_in_level_;
  ++levels_.back().moves;
  AliceMove mv{Ball(center, reach()), n_, levels_.back().type, "", std::move(reason), pending};
  switch (phase_) {
    case Phase::AfterII:
      mv.phase = "II";
      break;
    case Phase::LoopI:
      mv.phase = "III";
      break;
    case Phase::Sub1:
      mv.phase = "III.1";
      break;
    case Phase::Sub2:
      mv.phase = "III.2";
      break;
    case Phase::Cleanup:
      mv.phase = "cleanup";
      break;
    case Phase::Classify:
      mv.phase = "classify";
      break;
  }
  return mv;
}

LevelType AliceStrategy::classify() {
  const StrategyConstants& c = *consts_;
  if (!ensure_branch(n_ - 1)) {
    monitor("trichotomy", n_, false, Rational(0), Rational(1), true);
    throw StrategyError("level " + std::to_string(n_) + ": ball meets a vertex of order " + std::to_string(n_ - 1) +
                        " in its interior");
  }
  LevelState lv;
  lv.n = n_;
  lv.radius = cur_->radius();
  lv.c = cur_->center();
  lv.target = twist_.eval(n_, lv.c);
  lv.J = J_;
  if (static_cast<long>(targets_.size()) <= n_) targets_.resize(static_cast<std::size_t>(n_ + 1));
  targets_[static_cast<std::size_t>(n_)] = lv.target;

  const Interval img = image(n_ - 1);
  lv.rho1 = img.length();
  const FirstOrderVertices fv = first_order_vertices(sys_, img);
  Rational thr;
  bool t1 = !fv.any();
  bool t2 = false;
  bool t3 = false;
  if (sys_.is_beta()) {
    thr = c.threshold_I();
    t2 = fv.count == 1 && lv.rho1 < thr;
    t3 = fv.any() && lv.rho1 >= thr;
  } else {
    if (fv.any()) {
      lv.N = fv.rightmost.is_zero() ? Integer(0) : fv.rightmost.reciprocal().floor();
    }
    thr = lv.N == 0 ? Rational(0) : c.beta * c.beta / (Rational(4) * Rational(Integer(lv.N * lv.N)));
    t2 = !fv.infinite && fv.count == 1 && lv.rho1 < thr;
    t3 = fv.any() && lv.rho1 >= thr;
  }
  const int fired = int(t1) + int(t2) + int(t3);
  monitor("trichotomy", n_, fired == 1, Rational(fired), Rational(1), true);
  if (fired != 1) throw StrategyError("level " + std::to_string(n_) + " fits " + std::to_string(fired) + " types");
  lv.type = t1 ? LevelType::I : (t2 ? LevelType::II : LevelType::III);

  Record rec("level");
  rec.add("n", n_).add("type", to_string(lv.type)).add("rho1", lv.rho1).add("center", lv.c).add("target", lv.target);
  rec.add("J", J_).add("N", lv.N.get_str());
  pending_records_.push_back(rec);

  const Rational s2_bound = typeII_since_J_ ? c.rho : c.beta * c.rho;
  monitor("statement2", n_, lv.rho1 >= s2_bound, lv.rho1, s2_bound);
  if (seen_III_) {
    const bool ok = !(n_ - J_ >= c.lambda && lv.type != LevelType::III);
    monitor("statement3", n_, ok, Rational(n_ - J_), Rational(c.lambda));
  }
  if (check_radius_chain_) {
    monitor("radius_chain", n_, lv.rho1 >= c.rho, lv.rho1, c.rho);
    check_radius_chain_ = false;
  }
  if (lv.type == LevelType::II) {
    monitor("lemma6", n_, !typeII_since_J_, Rational(typeII_since_J_ ? 2 : 1), Rational(1));
    typeII_since_J_ = true;
  }
  levels_.push_back(lv);
  return lv.type;
}

std::optional<AliceMove> AliceStrategy::step() {
  const StrategyConstants& c = *consts_;
  for (;;) {
    switch (phase_) {
      case Phase::Classify: {
        const LevelType t = classify();
        k_ = 1;
        moves_in_level_ = 0;
        if (t == LevelType::I) {
          ++n_;
          continue;
        }
        if (t == LevelType::II) {
          phase_ = Phase::AfterII;
          const Interval img = image(n_ - 1);
          const FirstOrderVertices fv = first_order_vertices(sys_, img);
          return make_move(branch(n_ - 1).inverse(fv.leftmost), "vertex", 1);
        }
        const long stars = static_cast<long>(star_set(*cur_).size());
        monitor("star_count", n_, stars <= c.lambda, Rational(stars), Rational(c.lambda));
        if (sys_.is_beta()) {
          phase_ = Phase::LoopI;
          continue;
        }
        // A_1 sits at the end of the ball whose image is leftmost
        const Interval iv = cur_->interval();
        const Rational br = reach();
        const Rational center = branch(n_ - 1).preserves_orientation() ? iv.lo + br : iv.hi - br;
        const Interval removed = Ball(center, br).interval();
        Integer count = 0;
        bool infinite = false;
        std::optional<Rational> leftmost;
        for (const Interval& comp : complement_components(iv, removed)) {
          const FirstOrderVertices fv = first_order_vertices(sys_, branch(n_ - 1).image(comp));
          if (fv.infinite) {
            infinite = true;
            leftmost = Rational(0);
          } else if (fv.count > 0) {
            count += fv.count;
            if (!leftmost || fv.leftmost < *leftmost) leftmost = fv.leftmost;
          }
        }
        LevelState& lv = levels_.back();
        lv.subcase = (!infinite && count <= 1) ? 1 : 2;
        if (lv.subcase == 1) {
          phase_ = Phase::Sub1;
          budget_flagged_ = false;
        } else {
          phase_ = Phase::Sub2;
          const Rational N(lv.N);
          sub2_threshold_ = c.beta * c.beta / (Rational(4) * N * N);
          const bool finite_k = leftmost && !leftmost->is_zero();
          lv.K = finite_k ? leftmost->reciprocal().floor() : Integer(0);
          const Rational lhs = N.reciprocal();
          const Rational rhs = finite_k ? (kOne + c.beta / kTwo) * *leftmost : Rational(0);
          monitor("k_compare", n_, finite_k && lhs < rhs, lhs, rhs);
          if (finite_k && lv.K - 1 >= lv.N) {
            const Rational smallest = Rational(Integer(1), Integer((lv.K - 1) * lv.K));
            const Rational floor_bound = (Rational(4) * N * N).reciprocal();
            monitor("cylinder_bound", n_, smallest > floor_bound, smallest, floor_bound);
          }
        }
        return make_move(center, "flush", 0);
      }
      case Phase::AfterII:
        ++n_;
        phase_ = Phase::Classify;
        continue;
      case Phase::LoopI:
      case Phase::Sub2: {
        LevelState& lv = levels_.back();
        const Rational thr = phase_ == Phase::LoopI ? c.threshold_I() : sub2_threshold_;
        const Rational diam = image(n_ - 1).length();
        if (lv.L == 0 && diam < thr) lv.L = k_;
        const auto stars = stars_within_reach(J_ + 1, n_ - 1);
        if (!stars.empty()) return make_move(median(stars), "star", static_cast<long>(stars.size()));
        if (diam >= thr) return make_move(cur_->center(), "center", 0);
        lv.H = k_;
        monitor("h_bound", n_, lv.H <= lv.L + c.clog, Rational(lv.H), Rational(lv.L + c.clog));
        const FirstOrderVertices fv = first_order_vertices(sys_, image(n_ - 1));
        const Rational vcount = fv.infinite ? Rational(-1) : Rational(fv.count);
        monitor("cleanup_vertices", n_, !fv.infinite && fv.count <= 1, vcount, Rational(1));
        bool unresolved = false;
        const long nstars = static_cast<long>(stars_for(n_, false, &unresolved).size());
        monitor("cleanup_stars", n_, !unresolved && nstars <= 2, Rational(unresolved ? -1 : nstars), Rational(2));
        phase_ = Phase::Cleanup;
        cleanup_moves_ = 0;
        continue;
      }
      case Phase::Sub1: {
        const long budget = 1 + c.clog_plus2;
        std::vector<Rational> pending = interior_vertices_n();
        auto s1 = stars_within_reach(J_ + 1, n_ - 1);
        pending.insert(pending.end(), s1.begin(), s1.end());
        bool unresolved = false;
        auto s2 = stars_for(n_, true, &unresolved);
        pending.insert(pending.end(), s2.begin(), s2.end());
        const long np = static_cast<long>(pending.size());
        if (moves_in_level_ < budget) {
          if (!pending.empty()) return make_move(median(pending), "pending", np);
          return make_move(cur_->center(), "center", 0);
        }
        if (!pending.empty() || unresolved) {
          if (!budget_flagged_) {
            monitor("subcase1_budget", n_, false, Rational(np), Rational(0));
            budget_flagged_ = true;
          }
          if (!pending.empty()) return make_move(median(pending), "pending", np);
          return make_move(cur_->center(), "center", 0);
        }
        if (!budget_flagged_) monitor("subcase1_budget", n_, true, Rational(0), Rational(0));
        levels_.back().H = k_;
        close_level();
        continue;
      }
      case Phase::Cleanup: {
        const auto verts = interior_vertices_n();
        if (!verts.empty()) {
          ++cleanup_moves_;
          return make_move(median(verts), "vertex", static_cast<long>(verts.size()));
        }
        bool unresolved = false;
        const auto st = stars_for(n_, true, &unresolved);
        if (!st.empty()) {
          ++cleanup_moves_;
          return make_move(median(st), "star", static_cast<long>(st.size()));
        }
        close_level();
        continue;
      }
    }
  }
}

void AliceStrategy::close_level() {
  const StrategyConstants& c = *consts_;
  if (!ensure_branch(n_)) throw StrategyError("level " + std::to_string(n_) + " closed with an interior vertex");
  const Interval iv = cur_->interval();
  if (static_cast<long>(close_margin_.size()) <= n_) close_margin_.resize(static_cast<std::size_t>(n_ + 1));
  Rational worst;
  bool any = false;
  for (long m = std::max(1L, J_ + 1); m <= n_; ++m) {
    SeparationRecord s{n_, m, margin(m, iv), Rational(0)};
    const Rational& y = targets_[static_cast<std::size_t>(m)];
    s.margin_prev = branch(m - 1).image(iv).distance_to(y);
    close_margin_[static_cast<std::size_t>(m)] = s.margin;
    Record r("sep");
    r.add("level", n_).add("m", m).add("margin", s.margin).add("margin_prev", s.margin_prev).add("delta", c.delta);
    pending_records_.push_back(r);
    if (!any || s.margin < worst) worst = s.margin;
    any = true;
    seps_.push_back(std::move(s));
  }
  if (any) monitor("separation", n_, worst >= c.delta, worst, c.delta, true);
  LevelState& lv = levels_.back();
  Record r("close");
  r.add("level", n_).add("H", lv.H).add("L", lv.L).add("subcase", static_cast<long>(lv.subcase)).add("moves", lv.moves);
  pending_records_.push_back(r);

  J_ = n_;
  typeII_since_J_ = false;
  seen_III_ = true;
  check_radius_chain_ = true;
  ++n_;
  k_ = 1;
  moves_in_level_ = 0;
  phase_ = Phase::Classify;
}

AliceMove AliceStrategy::respond(const GameState& gs) {
  const auto bob = gs.last_bob();
  if (!bob || gs.to_move() != Player::Alice) throw std::logic_error("respond: it is not Alice's turn");
  if (!consts_) {
    consts_ = derive_constants(sys_, beta_, bob->diameter(), oracle_R_);
    const StrategyConstants& c = *consts_;
    Record r("constants");
    r.add("rho1_1", c.rho1_1).add("rho", c.rho).add("rho_sharp", c.rho_sharp).add("lambda", c.lambda);
    r.add("clog", c.clog).add("clog2", c.clog_plus2).add("R", c.R).add("delta", c.delta).add("delta_final", c.delta_final);
    pending_records_.push_back(r);
    cur_ = *bob;
  } else {
    cur_ = *bob;
    if (phase_ != Phase::AfterII) ++k_;
  }
  auto mv = step();
  if (!mv) throw StrategyError("strategy produced no move");
  const Verdict v = gs.validate_alice_move(mv->ball);
  if (!v.accepted()) {
    monitor("legality", n_, false, mv->ball.radius(), reach(), true);
  }
  return *mv;
}

FinalReport AliceStrategy::finish(const GameState& gs) {
  FinalReport rep;
  const auto bob = gs.last_bob();
  if (!bob || !consts_) {
    pending_records_.push_back(Record("final").add("deepest", "-").add("witness", "-"));
    return rep;
  }
  const StrategyConstants& c = *consts_;
  cur_ = *bob;
  rep.deepest = bob->interval();
  rep.witness = rep.deepest.midpoint();
  rep.depth = J_;

  const Rational half = c.delta / kTwo;
  const Rational dprime = twist_.inverse_modulus(half);
  rep.N = rep.depth + 1;
  for (const LevelState& lv : levels_) {
    if (lv.radius < dprime) {
      rep.N = std::max(1L, lv.n);
      break;
    }
  }
  const Rational bound = half - kTwo * twist_.approximation_error();
  Rational t = rep.witness;
  for (long n = 1; n <= rep.depth; ++n) {
    t = apply_map(sys_, t);
    if (n < rep.N) continue;
    const Rational d = distance(t, twist_.eval(n, rep.witness));
    if (!rep.min_margin || d < *rep.min_margin) rep.min_margin = d;
  }
  if (rep.min_margin) {
    monitor("final_witness", rep.depth, *rep.min_margin >= bound, *rep.min_margin, bound, true);
  }

  if (rep.depth >= 1) {
    Rational worst_gain;
    bool ok = true;
    for (long m = 1; m <= rep.depth; ++m) {
      const Rational gain = margin(m, rep.deepest) - close_margin_[static_cast<std::size_t>(m)];
      if (m == 1 || gain < worst_gain) worst_gain = gain;
      if (gain.sign() < 0) ok = false;
    }
    monitor("monotone_margin", rep.depth, ok, worst_gain, Rational(0));
  }

  if (sys_.is_gauss()) {
    Rational x = rep.witness;
    Integer mx = 0;
    for (long k = 0; k < rep.depth && !x.is_zero(); ++k) {
      const Rational inv = x.reciprocal();
      const Integer a = inv.floor();
      rep.cf_prefix.push_back(a);
      if (a > mx) mx = a;
      x = inv - Rational(a);
    }
    rep.cf_max = mx;
    if (twist_.is_constant_zero()) {
      const Rational cap = Rational(Integer(c.delta.reciprocal().ceil() + 1));
      monitor("cf_prefix", rep.depth, Rational(mx) <= cap, Rational(mx), cap);
    }
  }

  const long illegal = static_cast<long>(std::count_if(monitors_.begin(), monitors_.end(),
                                                       [](const MonitorRecord& m) { return m.name == "legality"; }));
  if (illegal == 0) monitor("legality", rep.depth, true, Rational(0), Rational(0), true);

  Record r("final");
  r.add("deepest", to_string(rep.deepest)).add("witness", rep.witness).add("N", rep.N).add("depth", rep.depth);
  r.add("min_margin", rep.min_margin ? rep.min_margin->str() : std::string("-"));
  r.add("cf", rep.cf_max ? rep.cf_max->get_str() : std::string("-"));
  pending_records_.push_back(r);
  return rep;
}

}  // namespace absgame
