#include "absgame/dynamics.hpp"

#include <algorithm>
#include <charconv>

namespace absgame {

namespace {

void require_unit(const Rational& x, const char* what) {
  if (x < Rational(0) || Rational(1) < x) {
    throw std::invalid_argument(std::string(what) + ": point outside [0,1]: " + x.str());
  }
}

void require_window(const Interval& w) {
  if (w.lo < Rational(0) || Rational(1) < w.hi) {
    throw std::invalid_argument("window outside [0,1]: " + to_string(w));
  }
}

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_count(std::size_t count, const EnumerationLimits& limits) {
  if (count > limits.max_points) {
    throw DepthOverflow("enumeration exceeds cap of " + std::to_string(limits.max_points) + " points");
  }
}

void gauss_preimages(long m, const Rational& y, const Rational& lo, const Rational& hi, const EnumerationLimits& limits,
                     std::vector<Rational>& out, bool& truncated) {
  if (m == 0) {
    if (lo <= y && y <= hi) out.push_back(y);
    check_count(out.size(), limits);
    return;
  }
  if (y.is_zero() && lo.is_zero()) out.push_back(Rational(0));
  if (hi.is_zero()) return;
  const Rational inv_hi = hi.reciprocal();
  Integer a_min = inv_hi.floor();
  if (a_min < 1) a_min = 1;
  Integer a_max;
  if (lo.is_zero()) {
    a_max = limits.max_first_digit;
    truncated = true;
  } else {
    a_max = lo.reciprocal().floor();
  }
  std::vector<Rational> inner;
  for (Integer a = a_min; a <= a_max; ++a) {
    const Rational ra(a);
    const Rational w_lo = max(Rational(0), inv_hi - ra);
    const Rational w_hi = lo.is_zero() ? Rational(1) : min(Rational(1), lo.reciprocal() - ra);
    if (w_hi < w_lo) continue;
    inner.clear();
    gauss_preimages(m - 1, y, w_lo, w_hi, limits, inner, truncated);
    for (const Rational& w : inner) {
      if (w == Rational(1)) continue;
      out.push_back((ra + w).reciprocal());
    }
    check_count(out.size(), limits);
  }
}

Branch first_order_branch(const SystemSpec& sys, const Integer& digit) { return Branch::identity(sys).extend(digit); }

}  // namespace

SystemSpec SystemSpec::beta(long gamma) {
  if (gamma < 2) throw std::invalid_argument("beta map needs integer gamma >= 2");
  return SystemSpec{SystemKind::BetaMap, gamma};
}

SystemSpec SystemSpec::parse(std::string_view text) {
  if (text == "gauss") return gauss();
  constexpr std::string_view prefix = "beta:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view num = text.substr(prefix.size());
    long gamma = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), gamma);
    if (ec == std::errc() && ptr == num.data() + num.size() && !num.empty() && num.front() != '0') {
      return beta(gamma);
    }
  }
  throw ParseError("unknown system '" + std::string(text) + "' (expected beta:<gamma> or gauss)");
}

std::string SystemSpec::str() const { return is_beta() ? "beta:" + std::to_string(gamma) : "gauss"; }

std::string CylinderAddress::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) s += ",";
    s += digits[i].get_str();
  }
  return s + ")";
}

Continuants continuants(const std::vector<Integer>& partial_quotients) {
  Continuants c;
  for (const Integer& a : partial_quotients) {
    Integer p = a * c.p_n + c.p_prev;
    Integer q = a * c.q_n + c.q_prev;
    c.p_prev = std::move(c.p_n);
    c.q_prev = std::move(c.q_n);
    c.p_n = std::move(p);
    c.q_n = std::move(q);
  }
  return c;
}

Integer fibonacci(long n) {
  if (n <= 0) return 0;
  Integer a = 0, b = 1;
  for (long i = 1; i < n; ++i) {
    Integer c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

Branch Branch::identity(const SystemSpec& sys) { return Branch(sys, 0, 0, 1, 1, 0); }

Branch Branch::of(const SystemSpec& sys, const CylinderAddress& addr) {
  Branch b = identity(sys);
  for (const Integer& d : addr.digits) b = b.extend(d);
  return b;
}

Branch Branch::extend(const Integer& digit) const {
  if (sys_.is_gauss()) {
    if (digit < 1) throw std::invalid_argument("partial quotient must be >= 1");
    return Branch(sys_, depth_ + 1, digit * P_ + Pp_, P_, digit * Q_ + Qp_, Q_);
  }
  if (digit < 0 || digit >= sys_.gamma) throw std::invalid_argument("digit outside 0..gamma-1");
  const Integer g = sys_.gamma;
  return Branch(sys_, depth_ + 1, g * P_ + digit * Pp_, Pp_, g * Q_ + digit * Qp_, Qp_);
}

Rational Branch::forward(const Rational& x) const {
  return (Rational(P_) - Rational(Q_) * x) / (Rational(Qp_) * x - Rational(Pp_));
}

Rational Branch::inverse(const Rational& t) const {
  return (Rational(P_) + Rational(Pp_) * t) / (Rational(Q_) + Rational(Qp_) * t);
}

Interval Branch::cylinder() const {
  Rational a(P_, Q_);
  Rational b(Integer(P_ + Pp_), Integer(Q_ + Qp_));
  return a < b ? Interval(a, b) : Interval(b, a);
}

Interval Branch::image(const Interval& iv) const {
  Rational a = forward(iv.lo);
  Rational b = forward(iv.hi);
  return a < b ? Interval(a, b) : Interval(b, a);
}

Interval Branch::preimage(const Interval& iv) const {
  Rational a = inverse(iv.lo);
  Rational b = inverse(iv.hi);
  return a < b ? Interval(a, b) : Interval(b, a);
}

Rational Branch::derivative(const Rational& x) const {
  Integer det = P_ * Qp_ - Pp_ * Q_;
  if (det < 0) det = -det;
  const Rational d = Rational(Qp_) * x - Rational(Pp_);
  return Rational(det) / (d * d);
}

bool Branch::preserves_orientation() const { return Pp_ * Q_ - P_ * Qp_ > 0; }

FirstOrderVertices first_order_vertices(const SystemSpec& sys, const Interval& iv) {
  FirstOrderVertices v;
  constexpr long kSampleCap = 64;
  if (sys.is_beta()) {
    const Rational g(sys.gamma);
    const Integer j0 = (iv.lo * g).ceil();
    const Integer j1 = (iv.hi * g).floor();
    if (j1 < j0) return v;
    v.count = j1 - j0 + 1;
    v.leftmost = Rational(j0, sys.gamma);
    v.rightmost = Rational(j1, sys.gamma);
    if (v.count <= kSampleCap) {
      for (Integer j = j0; j <= j1; ++j) v.sample.emplace_back(j, Integer(sys.gamma));
    }
    return v;
  }
  if (iv.lo.is_zero()) {
    v.infinite = true;
    v.rightmost = iv.hi.is_zero() ? Rational(0) : Rational(Integer(1), iv.hi.reciprocal().ceil());
    return v;
  }
  const Integer k0 = iv.hi.reciprocal().ceil();
  const Integer k1 = iv.lo.reciprocal().floor();
  if (k1 < k0) return v;
  v.count = k1 - k0 + 1;
  v.leftmost = Rational(Integer(1), k1);
  v.rightmost = Rational(Integer(1), k0);
  if (v.count <= kSampleCap) {
    for (Integer k = k1; k >= k0; --k) v.sample.emplace_back(Integer(1), k);
  }
  return v;
}

bool has_interior_first_order_vertex(const SystemSpec& sys, const Interval& iv) {
  if (!(iv.lo < iv.hi)) return false;
  if (sys.is_beta()) {
    const Integer j = (iv.lo * Rational(sys.gamma)).floor() + 1;
    return Rational(j, sys.gamma) < iv.hi;
  }
  if (iv.lo.is_zero()) return true;
  const Integer k = iv.hi.reciprocal().floor() + 1;
  return Rational(k) < iv.lo.reciprocal();
}

Integer first_digit(const SystemSpec& sys, const Interval& iv) {
  const Rational mid = iv.midpoint();
  if (sys.is_beta()) {
    Integer d = (mid * Rational(sys.gamma)).floor();
    if (d >= sys.gamma) d = sys.gamma - 1;
    return d;
  }
  if (mid.is_zero()) throw BoundaryError("0 lies in no first-order cylinder of the Gauss map");
  return mid.reciprocal().floor();
}

Rational apply_map(const SystemSpec& sys, const Rational& x) {
  require_unit(x, "apply_map");
  if (sys.is_beta()) return (x * Rational(sys.gamma)).frac();
  if (x.is_zero()) return Rational(0);
  return x.reciprocal().frac();
}

Rational iterate_map(const SystemSpec& sys, long m, const Rational& x) {
  Rational y = x;
  for (long k = 0; k < m; ++k) y = apply_map(sys, y);
  return y;
}

Enumeration enumerate_vertices(const SystemSpec& sys, long n, const Interval& window, const EnumerationLimits& limits) {
  return branch_preimages(sys, n, Rational(0), window, limits);
}

CylinderAddress cylinder_of(const SystemSpec& sys, long n, const Rational& x) {
  require_unit(x, "cylinder_of");
  CylinderAddress addr;
  Rational y = x;
  for (long k = 0; k <= n; ++k) {
    if (y.is_zero()) throw BoundaryError("point " + x.str() + " is a vertex of order " + std::to_string(k));
    if (k == n) break;
    if (sys.is_beta()) {
      const Rational gy = y * Rational(sys.gamma);
      Integer d = gy.floor();
      addr.digits.push_back(d);
      y = gy - Rational(d);
    } else {
      const Rational inv = y.reciprocal();
      Integer a = inv.floor();
      addr.digits.push_back(a);
      y = inv - Rational(a);
    }
  }
  return addr;
}

Interval cylinder_interval(const SystemSpec& sys, const CylinderAddress& addr) { return Branch::of(sys, addr).cylinder(); }

Branch branch_for_interval(const SystemSpec& sys, long m, const Interval& iv) {
  require_window(iv);
  Branch b = Branch::identity(sys);
  Interval cur = iv;
  for (long k = 0; k < m; ++k) {
    if (has_interior_first_order_vertex(sys, cur)) {
      throw InjectivityError("interval " + to_string(iv) + " contains a vertex of order " + std::to_string(k + 1) +
                             " in its interior");
    }
    const Integer d = first_digit(sys, cur);
    cur = first_order_branch(sys, d).image(cur);
    b = b.extend(d);
  }
  return b;
}

Interval interval_image(const SystemSpec& sys, long m, const Interval& iv) {
  if (iv.lo == iv.hi) {
    const Rational y = iterate_map(sys, m, iv.lo);
    return Interval(y, y);
  }
  require_window(iv);
  Interval cur = iv;
  for (long k = 0; k < m; ++k) {
    if (has_interior_first_order_vertex(sys, cur)) {
      throw InjectivityError("interval " + to_string(iv) + " contains a vertex of order " + std::to_string(k + 1) +
                             " in its interior");
    }
    cur = first_order_branch(sys, first_digit(sys, cur)).image(cur);
  }
  return cur;
}

Enumeration branch_preimages(const SystemSpec& sys, long m, const Rational& y, const Interval& window,
                             const EnumerationLimits& limits) {
  require_unit(y, "branch_preimages");
  require_window(window);
  if (m < 0) throw std::invalid_argument("negative depth");
  Enumeration e;
  if (m == 0) {
    if (window.contains(y)) e.points.push_back(y);
    return e;
  }
  if (sys.is_beta()) {
    if (y == Rational(1)) return e;
    Integer gm;
    mpz_ui_pow_ui(gm.get_mpz_t(), static_cast<unsigned long>(sys.gamma), static_cast<unsigned long>(m));
    const Rational g(gm);
    Integer k0 = (window.lo * g - y).ceil();
    if (k0 < 0) k0 = 0;
    Integer k1 = (window.hi * g - y).floor();
    const Integer kmax = (g - y).floor();
    if (k1 > kmax) k1 = kmax;
    if (k1 < k0) return e;
    const Integer count = k1 - k0 + 1;
    if (count > Integer(static_cast<unsigned long>(limits.max_points))) {
      throw DepthOverflow("enumeration exceeds cap of " + std::to_string(limits.max_points) + " points");
    }
    for (Integer k = k0; k <= k1; ++k) e.points.push_back((y + Rational(k)) / g);
    return e;
  }
  gauss_preimages(m, y, window.lo, window.hi, limits, e.points, e.truncated);
  sort_unique(e.points);
  return e;
}

Rational derivative_magnitude(const SystemSpec& sys, long m, const Rational& x) {
  require_unit(x, "derivative_magnitude");
  Rational d(1);
  Rational y = x;
  for (long k = 0; k < m; ++k) {
    if (y.is_zero()) throw BoundaryError("derivative undefined at vertex " + x.str());
    if (sys.is_beta()) {
      d *= Rational(sys.gamma);
    } else {
      d /= y * y;
    }
    y = apply_map(sys, y);
  }
  return d;
}

Rational distortion_ratio(const SystemSpec& sys, long m, const Rational& x, const Rational& y) {
  require_unit(x, "distortion_ratio");
  require_unit(y, "distortion_ratio");
  if (x == y) return Rational(1);
  const Interval iv = x < y ? Interval(x, y) : Interval(y, x);
  try {
    const Branch b = branch_for_interval(sys, m, iv);
    return b.derivative(x) / b.derivative(y);
  } catch (const InjectivityError&) {
    throw CylinderMismatch(x.str() + " and " + y.str() + " lie in different cylinders of order " + std::to_string(m));
  }
}

}  // namespace absgame
