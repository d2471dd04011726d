#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "absgame/ball.hpp"
#include "absgame/rational.hpp"

namespace absgame {

class DynamicsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
/// A point sits on a vertex where the requested quantity is undefined.
class BoundaryError : public DynamicsError {
 public:
  using DynamicsError::DynamicsError;
};
/// An interval has a vertex of the relevant order in its interior.
class InjectivityError : public DynamicsError {
 public:
  using DynamicsError::DynamicsError;
};
/// Two points do not share a cylinder.
class CylinderMismatch : public DynamicsError {
 public:
  using DynamicsError::DynamicsError;
};
/// An enumeration exceeded its configured cap.
class DepthOverflow : public DynamicsError {
 public:
  using DynamicsError::DynamicsError;
};

enum class SystemKind { BetaMap, GaussMap };

/// x -> gamma*x mod 1 (integer gamma >= 2) or the Gauss map x -> 1/x mod 1.
struct SystemSpec {
  SystemKind kind = SystemKind::GaussMap;
  long gamma = 0;

  static SystemSpec beta(long gamma);
  static SystemSpec gauss() { return SystemSpec{}; }
  /// Accepts "beta:<gamma>" or "gauss".
  static SystemSpec parse(std::string_view text);

  bool is_beta() const { return kind == SystemKind::BetaMap; }
  bool is_gauss() const { return kind == SystemKind::GaussMap; }
  std::string str() const;

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

struct EnumerationLimits {
  std::size_t max_points = 1u << 20;
  long max_first_digit = 1'000'000;
};

/// Result of a window enumeration. `truncated` is set when a Gauss-map window
/// reaches 0 and the first digit had to be capped.
struct Enumeration {
  std::vector<Rational> points;
  bool truncated = false;
};

/// Digits of a cylinder: partial quotients (Gauss map, each >= 1) or base-gamma digits.
struct CylinderAddress {
  std::vector<Integer> digits;
  std::size_t depth() const { return digits.size(); }
  std::string str() const;
  friend bool operator==(const CylinderAddress&, const CylinderAddress&) = default;
};

/// Continuants of a finite continued fraction: p_n/q_n and p_{n-1}/q_{n-1}.
struct Continuants {
  Integer p_n = 0;
  Integer q_n = 1;
  Integer p_prev = 1;
  Integer q_prev = 0;
};

Continuants continuants(const std::vector<Integer>& partial_quotients);

/// F_1 = F_2 = 1.
Integer fibonacci(long n);

/// T^m restricted to one closed cylinder of order m, stored through its inverse
///   x = (P + P' t) / (Q + Q' t),  t = T^m x in [0,1].
/// For the Gauss map (P, P', Q, Q') are the continuants (p_m, p_{m-1}, q_m, q_{m-1});
/// for x -> gamma x mod 1 they are (j, 1, gamma^m, 0). Endpoints use the continuous
/// extension of the branch, so the cylinder maps onto all of [0,1].
class Branch {
 public:
  static Branch identity(const SystemSpec& sys);
  static Branch of(const SystemSpec& sys, const CylinderAddress& addr);

  const SystemSpec& system() const { return sys_; }
  long depth() const { return depth_; }

  /// Branch of order depth()+1 obtained by appending one digit.
  Branch extend(const Integer& digit) const;

  Rational forward(const Rational& x) const;
  Rational inverse(const Rational& t) const;
  Interval cylinder() const;
  Interval image(const Interval& iv) const;
  Interval preimage(const Interval& iv) const;
  /// |D T^m| at x along this branch (finite at the cylinder endpoints).
  Rational derivative(const Rational& x) const;
  bool preserves_orientation() const;

  const Integer& P() const { return P_; }
  const Integer& Pp() const { return Pp_; }
  const Integer& Q() const { return Q_; }
  const Integer& Qp() const { return Qp_; }

 private:
  Branch(SystemSpec sys, long depth, Integer P, Integer Pp, Integer Q, Integer Qp)
      : sys_(sys), depth_(depth), P_(std::move(P)), Pp_(std::move(Pp)), Q_(std::move(Q)), Qp_(std::move(Qp)) {}

  SystemSpec sys_;
  long depth_ = 0;
  Integer P_, Pp_, Q_, Qp_;
};

/// Order-one vertices (points of T^{-1}(0)) inside a closed interval.
struct FirstOrderVertices {
  bool infinite = false;  ///< Gauss map interval reaching 0
  Integer count = 0;      ///< valid when !infinite
  std::vector<Rational> sample;  ///< all of them when count is small, else empty
  Rational leftmost;      ///< valid when count > 0 and !infinite
  Rational rightmost;     ///< valid when count > 0 or infinite (largest one)
  bool any() const { return infinite || count > 0; }
};

FirstOrderVertices first_order_vertices(const SystemSpec& sys, const Interval& iv);
/// True if some order-one vertex lies strictly inside iv.
bool has_interior_first_order_vertex(const SystemSpec& sys, const Interval& iv);
/// Digit of the closed first-order cylinder containing iv (iv must not straddle a vertex).
Integer first_digit(const SystemSpec& sys, const Interval& iv);

Rational apply_map(const SystemSpec& sys, const Rational& x);
Rational iterate_map(const SystemSpec& sys, long m, const Rational& x);

Enumeration enumerate_vertices(const SystemSpec& sys, long n, const Interval& window,
                               const EnumerationLimits& limits = {});

/// Address of the cylinder of order n whose interior holds x.
CylinderAddress cylinder_of(const SystemSpec& sys, long n, const Rational& x);
Interval cylinder_interval(const SystemSpec& sys, const CylinderAddress& addr);

/// Branch of T^m on the closed cylinder that contains iv; throws InjectivityError
/// if a vertex of order m lies in the interior of iv.
Branch branch_for_interval(const SystemSpec& sys, long m, const Interval& iv);
Interval interval_image(const SystemSpec& sys, long m, const Interval& iv);

/// All z in window with T^m(z) = y, in increasing order.
Enumeration branch_preimages(const SystemSpec& sys, long m, const Rational& y, const Interval& window,
                             const EnumerationLimits& limits = {});

/// |D_x T^m| via the chain rule; BoundaryError if T^k x = 0 for some k < m.
Rational derivative_magnitude(const SystemSpec& sys, long m, const Rational& x);
/// |D_x T^m| / |D_y T^m| for x, y in one closed cylinder of order m.
Rational distortion_ratio(const SystemSpec& sys, long m, const Rational& x, const Rational& y);

}  // namespace absgame
