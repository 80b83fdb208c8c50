#include "afinv/elliptic.hpp"

#include "afinv/error.hpp"
#include "afinv/exact_linalg.hpp"

#include <algorithm>
#include <set>

namespace afinv {

LegendreParameter::LegendreParameter(Rational lam) : lam_(std::move(lam)) {
  lam_.canonicalize();
  if (lam_ == 0 || lam_ == 1)
    throw Error(ErrorKind::SingularLambda,
                "lambda = " + to_string(lam_) + " gives a singular curve");
}

namespace {

BigInt short_disc_core(const BigInt& a, const BigInt& b) {
  return BigInt(4 * a * a * a + 27 * b * b);
}

}  // namespace

CurveQ::CurveQ(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {
  disc_ = -16 * short_disc_core(a_, b_);
  if (disc_ == 0)
    throw Error(ErrorKind::SingularCurve,
                "y^2 = x^3 + (" + a_.get_str() + ")x + (" + b_.get_str() + ") is singular");
}

Rational CurveQ::j_invariant() const {
  return make_rational(BigInt(1728 * 4 * a_ * a_ * a_), short_disc_core(a_, b_));
}

bool CurveQ::contains(const Point& p) const {
  if (p.is_infinity()) return true;
  const Rational& x = p.x();
  return p.y() * p.y() == x * x * x + Rational(a_) * x + Rational(b_);
}

Rational j_from_lambda(const LegendreParameter& lam) {
  const Rational& l = lam.value();
  const Rational s = l * l - l + 1;
  Rational j = 256 * s * s * s / (l * l * (l - 1) * (l - 1));
  j.canonicalize();
  return j;
}

std::vector<Rational> lambda_orbit(const LegendreParameter& lam) {
  const Rational& l = lam.value();
  std::set<Rational> orbit{
      l, Rational(1 / l), Rational(1 - l), Rational(1 / (1 - l)),
      Rational(l / (l - 1)), Rational((l - 1) / l)};
  std::vector<Rational> out;
  for (Rational r : orbit) {
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

std::vector<Rational> rational_lambdas_from_j(const Rational& j) {
  Rational jc = j;
  jc.canonicalize();
  const BigInt num = jc.get_num();
  const BigInt den = jc.get_den();
  // den * 256 (l^2 - l + 1)^3 - num * l^2 (l - 1)^2
  const IntPolynomial s({1, -1, 1});
  const IntPolynomial cube = s * s * s;
  std::vector<BigInt> c(7, BigInt(0));
  for (std::size_t i = 0; i < cube.coeffs().size(); ++i) c[i] += 256 * den * cube.coeffs()[i];
  const BigInt tail[] = {0, 0, 1, -2, 1};
  for (std::size_t i = 0; i < 5; ++i) c[i] -= num * tail[i];
  BigInt content = 0;
  for (const auto& x : c) content = gcd(content, x);
  for (auto& x : c) x /= content;

  auto eval = [&](const Rational& x) {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  };

  // Rational root theorem; c[0] = c[6] = 256 den / content != 0, so 0 is
  // never a root.
  std::set<Rational> roots;
  const auto us = divisors(c[0]);
  const auto vs = divisors(c[6]);
  for (const auto& u : us)
    for (const auto& v : vs) {
      if (gcd(u, v) != 1) continue;
      for (const BigInt& su : {u, BigInt(-u)}) {
        const Rational cand = make_rational(su, v);
        if (eval(cand) == 0) roots.insert(cand);
      }
    }
  return {roots.begin(), roots.end()};
}

Point WeierstrassModel::from_legendre(const Point& p) const {
  if (p.is_infinity()) return p;
  const Rational u2(scale * scale), u3(scale * scale * scale);
  return Point(Rational(u2 * (p.x() - shift)), Rational(u3 * p.y()));
}

Point WeierstrassModel::to_legendre(const Point& p) const {
  if (p.is_infinity()) return p;
  const Rational u2(scale * scale), u3(scale * scale * scale);
  return Point(Rational(p.x() / u2 + shift), Rational(p.y() / u3));
}

namespace {

// Least u > 0 with u^k * r integral.
BigInt clearing_root(const Rational& r, unsigned k, BigInt u) {
  for (const auto& [prime, exp] : factorize(r.get_den())) {
    unsigned need = (exp + k - 1) / k;
    unsigned have = 0;
    BigInt t = u;
    while (divides(prime, t)) {
      t /= prime;
      ++have;
    }
    for (; have < need; ++have) u *= prime;
  }
  return u;
}

}  // namespace

WeierstrassModel legendre_to_weierstrass(const LegendreParameter& lam) {
  // y^2 = x^3 + a2 x^2 + a4 x with a2 = -(1 + l), a4 = l.
  const Rational& l = lam.value();
  const Rational a2 = -(1 + l);
  const Rational a4 = l;
  const Rational big_a = a4 - a2 * a2 / 3;
  const Rational big_b = -a2 * a4 / 3 + 2 * a2 * a2 * a2 / 27;
  BigInt u = clearing_root(big_a, 4, BigInt(1));
  u = clearing_root(big_b, 6, u);
  const Rational u4(pow(u, 4)), u6(pow(u, 6));
  const Rational ca = big_a * u4, cb = big_b * u6;
  return WeierstrassModel{CurveQ(ca.get_num(), cb.get_num()), Rational(-a2 / 3), u};
}

Point negate(const Point& p) {
  if (p.is_infinity()) return p;
  return Point(p.x(), Rational(-p.y()));
}

Point add_points(const CurveQ& e, const Point& p, const Point& q) {
  if (!e.contains(p) || !e.contains(q))
    throw Error(ErrorKind::PointNotOnCurve, "point is not on the curve");
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  Rational slope;
  if (p.x() == q.x()) {
    if (p.y() != q.y() || p.y() == 0) return Point::infinity();
    slope = (3 * p.x() * p.x() + Rational(e.a())) / (2 * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  Rational x = slope * slope - p.x() - q.x();
  Rational y = slope * (p.x() - x) - p.y();
  x.canonicalize();
  y.canonicalize();
  return Point(std::move(x), std::move(y));
}

Point multiply(const CurveQ& e, const Point& p, unsigned long k) {
  Point acc = Point::infinity();
  Point base = p;
  while (k > 0) {
    if (k & 1UL) acc = add_points(e, acc, base);
    k >>= 1U;
    if (k > 0) base = add_points(e, base, base);
  }
  return acc;
}

std::optional<unsigned> point_order(const CurveQ& e, const Point& p, unsigned bound) {
  Point q = p;
  for (unsigned k = 1; k <= bound; ++k) {
    if (q.is_infinity()) return k;
    q = add_points(e, q, p);
  }
  return std::nullopt;
}

std::vector<BigInt> integer_roots_depressed_cubic(const BigInt& a, const BigInt& c) {
  auto f = [&](const BigInt& x) { return BigInt(x * x * x + a * x + c); };
  const BigInt bound = 1 + std::max(abs(a), abs(c));
  std::set<BigInt> roots;
  // Binary search on an integer interval where f is strictly monotone.
  auto search = [&](BigInt lo, BigInt hi, int dir) {
    while (lo <= hi) {
      BigInt mid = floor_div(BigInt(lo + hi), BigInt(2));
      const int s = sgn(f(mid)) * dir;
      if (s == 0) {
        roots.insert(mid);
        return;
      }
      if (s < 0)
        lo = mid + 1;
      else
        hi = mid - 1;
    }
  };
  if (a >= 0) {
    search(-bound, bound, 1);
  } else {
    // Critical points at +-s, s = sqrt(-a/3).
    const BigInt tf = isqrt(floor_div(BigInt(-a), BigInt(3)));
    const BigInt tc = (3 * tf * tf == -a) ? tf : BigInt(tf + 1);
    search(-bound, BigInt(-tc), 1);
    search(BigInt(-tf), tf, -1);
    search(tc, bound, 1);
  }
  return {roots.begin(), roots.end()};
}

TorsionResult torsion_subgroup(const CurveQ& e) {
  // y = 0, or y > 0 with y^2 | disc.
  std::vector<BigInt> ys{BigInt(0), BigInt(1)};
  for (const auto& [prime, exp] : factorize(e.discriminant())) {
    const std::size_t base = ys.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= exp / 2; ++k) {
      pk *= prime;
      for (std::size_t i = 1; i < base; ++i) ys.push_back(ys[i] * pk);
    }
  }

  std::set<Point> points{Point::infinity()};
  BigInt exponent = 1;
  for (const auto& yc : ys) {
    for (const auto& x : integer_roots_depressed_cubic(e.a(), BigInt(e.b() - yc * yc))) {
      for (const BigInt& sy : {yc, BigInt(-yc)}) {
        Point p{Rational(x), Rational(sy)};
        if (points.count(p)) continue;
        if (auto ord = point_order(e, p)) {
          points.insert(p);
          exponent = lcm(exponent, BigInt(*ord));
        }
      }
    }
  }

  const BigInt order(static_cast<unsigned long>(points.size()));
  TorsionResult out;
  out.group = AbelianGroup::from_cyclic_orders({BigInt(order / exponent), exponent});
  out.points.assign(points.begin(), points.end());
  return out;
}

}  // namespace afinv
