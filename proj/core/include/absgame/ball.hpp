#pragma once

#include <string>
#include <vector>

#include "absgame/rational.hpp"

namespace absgame {

/// Closed interval [lo, hi] with lo <= hi.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational lo_, Rational hi_);

  Rational length() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  bool interior_contains(const Rational& x) const { return lo < x && x < hi; }
  /// Distance from x to the nearest point of the interval (0 inside).
  Rational distance_to(const Rational& x) const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& iv);

/// The unit interval, the ambient space of the game.
Interval unit_interval();

/// Closed metric ball of the space [0,1]: {x in [0,1] : |x - center| <= radius}.
class Ball {
 public:
  /// Throws std::invalid_argument unless center is in [0,1] and radius > 0.
  Ball(Rational center, Rational radius);

  const Rational& center() const { return center_; }
  const Rational& radius() const { return radius_; }

  /// The point set, clipped to [0,1].
  Interval interval() const;
  Rational left() const;
  Rational right() const;
  /// Length of the clipped point set.
  Rational diameter() const { return right() - left(); }
  /// True when the ball sits inside [0,1] without clipping.
  bool unclipped() const;

  friend bool operator==(const Ball&, const Ball&) = default;

 private:
  Rational center_;
  Rational radius_;
};

std::string to_string(const Ball& b);

/// inner ⊆ outer as point sets.
bool ball_contains(const Ball& outer, const Ball& inner);

/// Maximal closed intervals of closure(outer \ removed); zero-length pieces are dropped.
std::vector<Interval> complement_components(const Ball& outer, const Ball& removed);
std::vector<Interval> complement_components(const Interval& outer, const Interval& removed);

}  // namespace absgame
