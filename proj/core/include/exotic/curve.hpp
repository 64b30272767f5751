#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "exotic/rat.hpp"

namespace exotic {

/// Short Weierstrass curve y^2 = x^3 + A x + B over Q with nonzero
/// discriminant. General models are rejected at construction.
class WeierstrassCurve {
 public:
  /// Throws std::domain_error when -16(4A^3 + 27B^2) = 0.
  WeierstrassCurve(Rat coeff_a, Rat coeff_b);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  Rat discriminant() const;

  bool operator==(const WeierstrassCurve& other) const = default;

 private:
  Rat a_;
  Rat b_;
};

/// y^2 = x^3 - 7x - 6 (rank zero over Q).
const WeierstrassCurve& curve_e1();

/// y^2 = x^3 - 111x + 450; its rational points are generated by [6,0]
/// (order two) and [3,-12] (infinite order).
const WeierstrassCurve& curve_e2();

/// Exact test of y^2 = x^3 + Ax + B.
bool on_curve(const WeierstrassCurve& curve, const Rat& x, const Rat& y);

/// A rational point: the point at infinity or an affine point, tagged with
/// its curve so cross-curve arithmetic is rejected.
class CurvePoint {
 public:
  static CurvePoint infinity(WeierstrassCurve curve);

  /// Throws std::domain_error when (x, y) does not satisfy the equation.
  static CurvePoint affine(WeierstrassCurve curve, Rat x, Rat y);

  bool is_infinity() const { return infinity_; }

  /// Coordinate accessors; throw std::logic_error at infinity.
  const Rat& x() const;
  const Rat& y() const;

  const WeierstrassCurve& curve() const { return curve_; }

  bool operator==(const CurvePoint& other) const;

 private:
  CurvePoint(WeierstrassCurve curve, bool inf, Rat x, Rat y);

  WeierstrassCurve curve_;
  bool infinity_;
  Rat x_;
  Rat y_;
};

/// Chord-tangent group law. Throws std::domain_error when the points live
/// on different curves.
CurvePoint add(const CurvePoint& p, const CurvePoint& q);

CurvePoint negate(const CurvePoint& p);

/// Double-and-add; scalar_mul(0, p) is infinity and scalar_mul(-k, p) is
/// negate(scalar_mul(k, p)).
CurvePoint scalar_mul(long k, const CurvePoint& p);

/// All affine rational points with y = 0, i.e. rational roots of
/// x^3 + Ax + B, sorted by ascending x. Found by rational-root search over
/// divisors of the cleared-denominator constant term.
std::vector<CurvePoint> rational_two_torsion(const WeierstrassCurve& curve);

/// Point text format: "inf" or "x,y" in the shared rational format.
std::string point_to_string(const CurvePoint& p);

/// Parses the point format against the given curve, validating membership.
/// Throws std::invalid_argument on malformed text or off-curve points.
CurvePoint parse_point(const WeierstrassCurve& curve, std::string_view text);

}  // namespace exotic
