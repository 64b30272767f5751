#include "exotic/curve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace exotic {

WeierstrassCurve::WeierstrassCurve(Rat coeff_a, Rat coeff_b)
    : a_(std::move(coeff_a)), b_(std::move(coeff_b)) {
  if (discriminant() == 0) {
    throw std::domain_error("WeierstrassCurve: singular curve (zero discriminant)");
  }
}

Rat WeierstrassCurve::discriminant() const {
  return -16 * (4 * a_ * a_ * a_ + 27 * b_ * b_);
}

const WeierstrassCurve& curve_e1() {
  static const WeierstrassCurve e1(make_rat(-7), make_rat(-6));
  return e1;
}

const WeierstrassCurve& curve_e2() {
  static const WeierstrassCurve e2(make_rat(-111), make_rat(450));
  return e2;
}

bool on_curve(const WeierstrassCurve& curve, const Rat& x, const Rat& y) {
  return y * y == x * x * x + curve.a() * x + curve.b();
}

CurvePoint::CurvePoint(WeierstrassCurve curve, bool inf, Rat x, Rat y)
    : curve_(std::move(curve)), infinity_(inf), x_(std::move(x)), y_(std::move(y)) {}

CurvePoint CurvePoint::infinity(WeierstrassCurve curve) {
  return CurvePoint(std::move(curve), true, Rat(), Rat());
}

CurvePoint CurvePoint::affine(WeierstrassCurve curve, Rat x, Rat y) {
  if (!on_curve(curve, x, y)) {
    throw std::domain_error("CurvePoint: (" + rat_to_string(x) + ", " + rat_to_string(y) +
                            ") is not on the curve");
  }
  return CurvePoint(std::move(curve), false, std::move(x), std::move(y));
}

const Rat& CurvePoint::x() const {
  if (infinity_) {
    throw std::logic_error("CurvePoint: no x coordinate at infinity");
  }
  return x_;
}

const Rat& CurvePoint::y() const {
  if (infinity_) {
    throw std::logic_error("CurvePoint: no y coordinate at infinity");
  }
  return y_;
}

bool CurvePoint::operator==(const CurvePoint& other) const {
  if (!(curve_ == other.curve_)) {
    return false;
  }
  if (infinity_ || other.infinity_) {
    return infinity_ == other.infinity_;
  }
  return x_ == other.x_ && y_ == other.y_;
}

CurvePoint add(const CurvePoint& p, const CurvePoint& q) {
  if (!(p.curve() == q.curve())) {
    throw std::domain_error("add: points on different curves");
  }
  if (p.is_infinity()) {
    return q;
  }
  if (q.is_infinity()) {
    return p;
  }
  const WeierstrassCurve& curve = p.curve();
  Rat lambda;
  if (p.x() == q.x()) {
    if (p.y() == -q.y()) {
      return CurvePoint::infinity(curve);  // inverse pair, includes y = 0
    }
    // Tangent: lambda = (3x^2 + A) / (2y)
    lambda = (3 * p.x() * p.x() + curve.a()) / (2 * p.y());
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  Rat x3 = lambda * lambda - p.x() - q.x();
  Rat y3 = lambda * (p.x() - x3) - p.y();
  return CurvePoint::affine(curve, std::move(x3), std::move(y3));
}

CurvePoint negate(const CurvePoint& p) {
  if (p.is_infinity()) {
    return p;
  }
  return CurvePoint::affine(p.curve(), p.x(), -p.y());
}

CurvePoint scalar_mul(long k, const CurvePoint& p) {
  if (k == 0) {
    return CurvePoint::infinity(p.curve());
  }
  const bool flip = k < 0;
  unsigned long mag = flip ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  CurvePoint acc = CurvePoint::infinity(p.curve());
  CurvePoint base = p;
  while (mag != 0) {
    if (mag & 1) {
      acc = add(acc, base);
    }
    mag >>= 1;
    if (mag != 0) {
      base = add(base, base);
    }
  }
  return flip ? negate(acc) : acc;
}

namespace {

// Positive divisors of |n| by trial division; n must be nonzero.
std::vector<Int> positive_divisors(Int n) {
  n = abs(n);
  std::vector<Int> low;
  std::vector<Int> high;
  for (Int i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      low.push_back(i);
      Int j = n / i;
      if (j != i) {
        high.push_back(j);
      }
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

}  // namespace

std::vector<CurvePoint> rational_two_torsion(const WeierstrassCurve& curve) {
  // Clear denominators: L x^3 + (L A) x + (L B) = 0 with integer
  // coefficients, so a reduced root p/q has p | L*B and q | L.
  Int lead = lcm(curve.a().get_den(), curve.b().get_den());
  Int coeff_b = lead / curve.b().get_den() * curve.b().get_num();

  auto is_root = [&](const Rat& x) { return x * x * x + curve.a() * x + curve.b() == 0; };

  std::set<Rat> roots;
  if (coeff_b == 0) {
    roots.insert(make_rat(0));
    // Remaining factor L x^2 + coeff_a: rational roots are +/- sqrt(-A).
    if (auto r = rat_sqrt(-curve.a())) {
      roots.insert(*r);
      roots.insert(Rat(-*r));
    }
  } else {
    for (const Int& p : positive_divisors(coeff_b)) {
      for (const Int& q : positive_divisors(lead)) {
        if (gcd(p, q) != 1) {
          continue;
        }
        Rat candidate = make_rat(p, q);
        if (is_root(candidate)) {
          roots.insert(candidate);
        }
        candidate = make_rat(-p, q);
        if (is_root(candidate)) {
          roots.insert(candidate);
        }
      }
    }
  }

  std::vector<CurvePoint> points;
  points.reserve(roots.size());
  for (const Rat& x : roots) {  // std::set iterates in ascending x
    points.push_back(CurvePoint::affine(curve, x, make_rat(0)));
  }
  return points;
}

std::string point_to_string(const CurvePoint& p) {
  if (p.is_infinity()) {
    return "inf";
  }
  return rat_to_string(p.x()) + "," + rat_to_string(p.y());
}

CurvePoint parse_point(const WeierstrassCurve& curve, std::string_view text) {
  if (text == "inf") {
    return CurvePoint::infinity(curve);
  }
  const std::size_t comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("parse_point: expected \"inf\" or \"x,y\"");
  }
  auto x = try_parse_rat(text.substr(0, comma));
  auto y = try_parse_rat(text.substr(comma + 1));
  if (!x || !y) {
    throw std::invalid_argument("parse_point: malformed coordinate");
  }
  if (!on_curve(curve, *x, *y)) {
    throw std::invalid_argument("parse_point: point is not on the curve");
  }
  return CurvePoint::affine(curve, *std::move(x), *std::move(y));
}

}  // namespace exotic
