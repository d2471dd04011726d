#include "absgame/ball.hpp"

#include <stdexcept>

namespace absgame {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) throw std::invalid_argument("interval with hi < lo: " + lo.str() + ", " + hi.str());
}

Rational Interval::distance_to(const Rational& x) const {
  if (x < lo) return lo - x;
  if (hi < x) return x - hi;
  return Rational(0);
}

std::string to_string(const Interval& iv) { return "[" + iv.lo.str() + "," + iv.hi.str() + "]"; }

Interval unit_interval() { return Interval(Rational(0), Rational(1)); }

Ball::Ball(Rational center, Rational radius) : center_(std::move(center)), radius_(std::move(radius)) {
  if (center_ < Rational(0) || Rational(1) < center_) {
    throw std::invalid_argument("ball center outside [0,1]: " + center_.str());
  }
  if (radius_.sign() <= 0) throw std::invalid_argument("ball radius must be positive: " + radius_.str());
}

Rational Ball::left() const { return max(Rational(0), center_ - radius_); }
Rational Ball::right() const { return min(Rational(1), center_ + radius_); }
Interval Ball::interval() const { return Interval(left(), right()); }

bool Ball::unclipped() const { return Rational(0) <= center_ - radius_ && center_ + radius_ <= Rational(1); }

std::string to_string(const Ball& b) { return "B(" + b.center().str() + "," + b.radius().str() + ")"; }

bool ball_contains(const Ball& outer, const Ball& inner) { return outer.interval().contains(inner.interval()); }

std::vector<Interval> complement_components(const Interval& outer, const Interval& removed) {
  std::vector<Interval> out;
  if (outer.lo < removed.lo) out.emplace_back(outer.lo, min(outer.hi, removed.lo));
  if (removed.hi < outer.hi) out.emplace_back(max(outer.lo, removed.hi), outer.hi);
  std::erase_if(out, [](const Interval& iv) { return iv.length().sign() <= 0; });
  return out;
}

std::vector<Interval> complement_components(const Ball& outer, const Ball& removed) {
  return complement_components(outer.interval(), removed.interval());
}

}  // namespace absgame
