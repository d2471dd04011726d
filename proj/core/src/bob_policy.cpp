#include "absgame/bob_policy.hpp"

#include <algorithm>

#include "absgame/transcript.hpp"

namespace absgame {

namespace {

const Rational kZero(0), kOne(1), kTwo(2);

/// A ball of radius s inside comp, centered as close to `want` as possible; nullopt if none fits.
std::optional<Ball> place(const Interval& comp, const Rational& s, const Rational& want) {
  if (comp.length() >= s + s) {
    const Rational c = max(comp.lo + s, min(comp.hi - s, want));
    return Ball(c, s);
  }
  if (comp.lo == kZero && comp.hi >= s) return Ball(kZero, s);
  if (comp.hi == kOne && comp.lo <= kOne - s) return Ball(kOne, s);
  return std::nullopt;
}

/// Nearest multiple of s/16 to x, so chained targets keep bounded denominators.
Rational snap(const Rational& x, const Rational& s) {
  const Rational step = s / Rational(16);
  return Rational((x / step + Rational(1, 2)).floor()) * step;
}

/// A grid center (multiple of s/16) for a ball of radius rad in comp, near want; the exact clamp if no grid point fits.
Rational grid_center(const Interval& comp, const Rational& rad, const Rational& s, const Rational& want) {
  const Rational step = s / Rational(16);
  const Rational lo = comp.lo + rad, hi = comp.hi - rad;
  const Rational first = Rational((lo / step).ceil()) * step;
  const Rational last = Rational((hi / step).floor()) * step;
  if (first > last) return max(lo, min(hi, want));
  return max(first, min(last, snap(want, s)));
}

bool fits(const Interval& comp, const Rational& s) { return place(comp, s, comp.midpoint()).has_value(); }

}  // namespace

Ball default_first_ball() { return Ball(Rational(1, 2), Rational(1, 4)); }

std::optional<Ball> RandomBob::next(const GameState& state) {
  forfeit_.clear();
  if (!state.last_bob()) {
    const Rational r(Integer(1), Integer(4) << static_cast<unsigned>(rng_() % 3));
    const Rational j(static_cast<long>(rng_() % 17));
    return Ball(r + (kOne - kTwo * r) * j / Rational(16), r);
  }
  const Rational s = state.bob_min_radius();
  const Rational r = state.last_bob()->radius();
  const Rational beta = state.config().beta;
  std::vector<Interval> roomy;
  for (const Interval& c : state.bob_region()) {
    if (c.length() >= s + s) roomy.push_back(c);
  }
  if (roomy.empty()) {
    for (const Interval& c : state.bob_region()) {
      if (auto b = place(c, s, c.midpoint())) return b;
    }
    forfeit_ = "no legal component";
    return std::nullopt;
  }
  const Interval comp = roomy[rng_() % roomy.size()];
  const Rational half = comp.length() / kTwo;
  const Rational step = s / Rational(16);
  const Rational half_grid = Rational((half / step).floor()) * step;
  std::vector<Rational> radii;
  for (const Rational& cand : {s, (beta + (Rational(1, 3) - beta) / kTwo) * r, half_grid}) {
    if (cand >= s && cand <= half) radii.push_back(cand);
  }
  const Rational rad = radii[rng_() % radii.size()];
  const Rational j(static_cast<long>(rng_() % 17));
  const Rational want = comp.lo + rad + (comp.length() - kTwo * rad) * j / Rational(16);
  return Ball(grid_center(comp, rad, s, want), rad);
}

std::optional<Ball> ExtremalBob::next(const GameState& state) {
  forfeit_.clear();
  if (!state.last_bob()) return default_first_ball();
  const Rational s = state.bob_min_radius();
  std::vector<Interval> comps = state.bob_region();
  if (side_ == Side::Right) std::reverse(comps.begin(), comps.end());
  // stable order: the first maximal component wins ties toward the chosen side
  std::stable_sort(comps.begin(), comps.end(), [](const Interval& a, const Interval& b) { return a.length() > b.length(); });
  for (const Interval& c : comps) {
    if (!fits(c, s)) continue;
    return place(c, s, side_ == Side::Left ? c.lo : c.hi);
  }
  forfeit_ = "no legal component";
  return std::nullopt;
}

CylinderTracker::CylinderTracker(SystemSpec sys, long max_depth)
    : sys_(sys), max_depth_(max_depth), branch_(Branch::identity(sys)) {}

void CylinderTracker::update(const Interval& iv) {
  Interval img = branch_.image(iv);
  while (branch_.depth() < max_depth_) {
    if (img.length().is_zero() || has_interior_first_order_vertex(sys_, img)) break;
    if (sys_.is_gauss() && img.lo.is_zero()) break;
    const Integer d = first_digit(sys_, img);
    const Branch next = branch_.extend(d);
    img = next.image(iv);
    branch_ = next;
  }
}

ChaserBob::ChaserBob(SystemSpec sys, TwistSequence twist, long lookahead)
    : sys_(sys), twist_(std::move(twist)), lookahead_(lookahead), tracker_(sys, 10000) {}

Rational ChaserBob::score(const Rational& z) const {
  const long m = tracker_.depth();
  Rational t = tracker_.branch().forward(z);
  Rational best = distance(t, twist_.eval(m, z));
  for (long j = 1; j < lookahead_; ++j) {
    t = apply_map(sys_, t);
    best = min(best, distance(t, twist_.eval(m + j, z)));
  }
  return best;
}

std::optional<Ball> ChaserBob::next(const GameState& state) {
  forfeit_.clear();
  if (!state.last_bob()) {
    const Ball b = default_first_ball();
    tracker_.update(b.interval());
    return b;
  }
  tracker_.update(state.last_bob()->interval());
  const Rational s = state.bob_min_radius();
  const long m = tracker_.depth();
  std::optional<Ball> best;
  Rational best_score;
  auto consider = [&](const Ball& b) {
    const Rational sc = score(b.center());
    if (!best || sc < best_score || (sc == best_score && b.center() < best->center())) {
      best = b;
      best_score = sc;
    }
  };
  auto ball_at = [&](const Interval& c, const Rational& want) {
    return c.length() >= s + s ? Ball(grid_center(c, s, s, want), s) : *place(c, s, want);
  };
  for (const Interval& c : state.bob_region()) {
    if (!fits(c, s)) continue;
    for (long j = 0; j <= 16; ++j) {
      const Rational want = c.lo + c.length() * Rational(j) / Rational(16);
      consider(ball_at(c, want));
    }
    const Rational target = twist_.eval(m, c.midpoint());
    const Interval pre = tracker_.branch().cylinder();
    if (pre.contains(c)) {
      const Rational z = tracker_.branch().inverse(target);
      consider(ball_at(c, z));
    }
  }
  if (!best) forfeit_ = "no legal component";
  return best;
}

std::optional<Ball> ReplayBob::next(const GameState& state) {
  forfeit_.clear();
  if (pos_ >= balls_.size()) {
    forfeit_ = "replay exhausted after " + std::to_string(pos_) + " balls";
    return std::nullopt;
  }
  const Ball b = balls_[pos_];
  const Verdict v = state.validate_bob_move(b);
  if (!v.accepted()) {
    forfeit_ = "replayed ball " + std::to_string(pos_ + 1) + " rejected: " + to_string(v.reason) + " (" + v.detail + ")";
    return std::nullopt;
  }
  ++pos_;
  return b;
}

void validate_bob_spec(std::string_view spec) {
  if (spec == "chaser" || spec == "extremal:left" || spec == "extremal:right") return;
  if (spec.starts_with("random:")) {
    const std::string_view seed = spec.substr(7);
    if (seed.empty() || !std::all_of(seed.begin(), seed.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw ParseError("bad random seed in '" + std::string(spec) + "'");
    }
    return;
  }
  if (spec.starts_with("replay:") && spec.size() > 7) return;
  throw ParseError("unknown Bob policy '" + std::string(spec) + "'");
}

std::unique_ptr<BobPolicy> make_bob_policy(std::string_view spec, const SystemSpec& sys, const TwistSequence& twist) {
  validate_bob_spec(spec);
  if (spec == "chaser") return std::make_unique<ChaserBob>(sys, twist);
  if (spec == "extremal:left") return std::make_unique<ExtremalBob>(Side::Left);
  if (spec == "extremal:right") return std::make_unique<ExtremalBob>(Side::Right);
  if (spec.starts_with("random:")) return std::make_unique<RandomBob>(std::stoull(std::string(spec.substr(7))));
  const std::string path(spec.substr(7));
  return std::make_unique<ReplayBob>(load_bob_balls(path), path);
}

}  // namespace absgame
