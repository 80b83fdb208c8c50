#pragma once

// Legendre-form elliptic curves over Q: j-invariant and the six-element
// lambda orbit, rational lambdas above a given j, conversion to an integral
// short Weierstrass model, the chord-and-tangent law, and rational torsion.

#include "afinv/abelian_group.hpp"
#include "afinv/bigint.hpp"

#include <optional>
#include <vector>

namespace afinv {

/// Rational lambda with lambda not in {0, 1}.
class LegendreParameter {
 public:
  /// Throws SingularLambda for 0 and 1.
  explicit LegendreParameter(Rational lam);
  const Rational& value() const { return lam_; }

 private:
  Rational lam_;
};

class Point {
 public:
  static Point infinity() { return Point(); }
  Point(Rational x, Rational y) : affine_(true), x_(std::move(x)), y_(std::move(y)) {}

  bool is_infinity() const { return !affine_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  friend bool operator==(const Point& p, const Point& q) {
    return p.affine_ == q.affine_ && (!p.affine_ || (p.x_ == q.x_ && p.y_ == q.y_));
  }
  /// Infinity first, then lexicographic in (x, y).
  friend bool operator<(const Point& p, const Point& q) {
    if (p.affine_ != q.affine_) return !p.affine_;
    if (!p.affine_) return false;
    if (p.x_ != q.x_) return p.x_ < q.x_;
    return p.y_ < q.y_;
  }

 private:
  Point() = default;
  bool affine_ = false;
  Rational x_, y_;
};

/// y^2 = x^3 + a x + b with integer a, b and nonzero discriminant.
class CurveQ {
 public:
  /// Throws SingularCurve when 4a^3 + 27b^2 = 0.
  CurveQ(BigInt a, BigInt b);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  /// -16 (4a^3 + 27b^2)
  const BigInt& discriminant() const { return disc_; }
  /// 1728 * 4a^3 / (4a^3 + 27b^2)
  Rational j_invariant() const;
  bool contains(const Point& p) const;

 private:
  BigInt a_, b_, disc_;
};

Rational j_from_lambda(const LegendreParameter& lam);

/// Distinct values among lambda, 1/lambda, 1-lambda, 1/(1-lambda),
/// lambda/(lambda-1), (lambda-1)/lambda, ascending.
std::vector<Rational> lambda_orbit(const LegendreParameter& lam);

/// All rational roots of 2^8 (l^2 - l + 1)^3 - j l^2 (l - 1)^2, ascending.
std::vector<Rational> rational_lambdas_from_j(const Rational& j);

/// Integral short model of y^2 = x(x-1)(x-lambda):
///   x_w = u^2 (x - shift),  y_w = u^3 y
/// where shift = (1 + lambda) / 3 removes the quadratic term and u is the
/// least positive integer making both coefficients integral.
struct WeierstrassModel {
  CurveQ curve;
  Rational shift;
  BigInt scale;

  Point from_legendre(const Point& p) const;
  Point to_legendre(const Point& p) const;
};

WeierstrassModel legendre_to_weierstrass(const LegendreParameter& lam);

Point negate(const Point& p);

/// Throws PointNotOnCurve if either input is off the curve.
Point add_points(const CurveQ& e, const Point& p, const Point& q);

/// k * p for k >= 0.
Point multiply(const CurveQ& e, const Point& p, unsigned long k);

/// Order of p if it is at most `bound`, else nullopt.
std::optional<unsigned> point_order(const CurveQ& e, const Point& p, unsigned bound = 12);

/// Integer roots of x^3 + a x + c, ascending.
std::vector<BigInt> integer_roots_depressed_cubic(const BigInt& a, const BigInt& c);

struct TorsionResult {
  AbelianGroup group;
  /// Sorted; the first entry is the point at infinity.
  std::vector<Point> points;
};

/// Rational torsion by Lutz-Nagell enumeration: integral points with y = 0 or
/// y^2 | discriminant, each confirmed to have order at most 12.
TorsionResult torsion_subgroup(const CurveQ& e);

}  // namespace afinv
