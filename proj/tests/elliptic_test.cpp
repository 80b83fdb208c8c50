#include "afinv/elliptic.hpp"
#include "afinv/error.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace afinv {
namespace {

using testing::ints;

Rational R(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::vector<Rational> Rs(std::initializer_list<std::pair<long, long>> v) {
  std::vector<Rational> out;
  for (auto [n, d] : v) out.push_back(R(n, d));
  std::sort(out.begin(), out.end());
  return out;
}

AbelianGroup G(std::initializer_list<long> torsion) { return AbelianGroup(ints(torsion), 0); }

// j from the Legendre formula, evaluated independently of the library.
Rational LegendreJ(const Rational& l) {
  const Rational num = l * l - l + 1;
  const Rational den = l * l * (l - 1) * (l - 1);
  return 256 * num * num * num / den;
}

TEST(Legendre, SingularParameters) {
  EXPECT_THROW(LegendreParameter(R(0)), Error);
  EXPECT_THROW(LegendreParameter(R(1)), Error);
  EXPECT_NO_THROW(LegendreParameter(R(-1)));
}

TEST(JFromLambda, Examples) {
  EXPECT_EQ(j_from_lambda(LegendreParameter(R(-1))), 1728);
  EXPECT_EQ(j_from_lambda(LegendreParameter(R(2))), 1728);
  EXPECT_EQ(j_from_lambda(LegendreParameter(R(1, 2))), 1728);
  EXPECT_EQ(j_from_lambda(LegendreParameter(R(3))), R(21952, 9));
}

TEST(LambdaOrbit, Examples) {
  const auto expected = Rs({{-1, 1}, {2, 1}, {1, 2}});
  EXPECT_EQ(lambda_orbit(LegendreParameter(R(-1))), expected);
  EXPECT_EQ(lambda_orbit(LegendreParameter(R(1, 2))), expected);
  EXPECT_EQ(lambda_orbit(LegendreParameter(R(3))),
            Rs({{3, 1}, {1, 3}, {-2, 1}, {-1, 2}, {3, 2}, {2, 3}}));
}

TEST(LambdaOrbit, JIsConstantOnRandomOrbits) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const long n = static_cast<long>(rng() % 61) - 30;
    const long d = 1 + static_cast<long>(rng() % 20);
    const Rational l = R(n, d);
    if (l == 0 || l == 1) continue;
    const auto orbit = lambda_orbit(LegendreParameter(l));
    EXPECT_TRUE(orbit.size() == 2 || orbit.size() == 3 || orbit.size() == 6);
    EXPECT_TRUE(std::is_sorted(orbit.begin(), orbit.end()));
    const Rational j = LegendreJ(l);
    EXPECT_EQ(j_from_lambda(LegendreParameter(l)), j);
    for (const auto& m : orbit) EXPECT_EQ(j_from_lambda(LegendreParameter(m)), j);
  }
}

TEST(RationalLambdasFromJ, Examples) {
  EXPECT_EQ(rational_lambdas_from_j(R(1728)), Rs({{-1, 1}, {2, 1}, {1, 2}}));
  const auto l3 = rational_lambdas_from_j(R(21952, 9));
  EXPECT_NE(std::find(l3.begin(), l3.end(), R(3)), l3.end());
  EXPECT_EQ(l3, lambda_orbit(LegendreParameter(R(3))));
  EXPECT_TRUE(rational_lambdas_from_j(R(0)).empty());
}

TEST(RationalLambdasFromJ, AgreesWithBruteForceScan) {
  // Scan all lambda = n/d with |n| <= 12, 1 <= d <= 12 and group by j.
  std::map<Rational, std::set<Rational>> fibres;
  for (long n = -12; n <= 12; ++n)
    for (long d = 1; d <= 12; ++d) {
      const Rational l = R(n, d);
      if (l != 0 && l != 1) fibres[LegendreJ(l)].insert(l);
    }
  int checked = 0;
  for (const auto& [j, found] : fibres) {
    if (checked++ > 150) break;
    const auto roots = rational_lambdas_from_j(j);
    for (const auto& l : found)
      EXPECT_NE(std::find(roots.begin(), roots.end(), l), roots.end()) << to_string(l);
    for (const auto& l : roots) EXPECT_EQ(LegendreJ(l), j);
  }
}

TEST(LegendreToWeierstrass, MinusOneIsTheCmCurve) {
  const WeierstrassModel w = legendre_to_weierstrass(LegendreParameter(R(-1)));
  EXPECT_EQ(w.curve.a(), -1);
  EXPECT_EQ(w.curve.b(), 0);
  EXPECT_EQ(w.curve.j_invariant(), 1728);
}

TEST(LegendreToWeierstrass, JIsPreserved) {
  for (const Rational& l : {R(2), R(1, 2), R(3), R(-5, 7), R(9, 4)}) {
    const WeierstrassModel w = legendre_to_weierstrass(LegendreParameter(l));
    EXPECT_NE(w.curve.discriminant(), 0);
    EXPECT_EQ(w.curve.j_invariant(), LegendreJ(l)) << to_string(l);
  }
  const WeierstrassModel half = legendre_to_weierstrass(LegendreParameter(R(1, 2)));
  EXPECT_EQ(half.curve.j_invariant(), 1728);
}

TEST(LegendreToWeierstrass, PointsMapBothWays) {
  for (const Rational& l : {R(-1), R(2), R(1, 2), R(3), R(-5, 7)}) {
    const WeierstrassModel w = legendre_to_weierstrass(LegendreParameter(l));
    for (const Point& p : {Point(R(0), R(0)), Point(R(1), R(0)), Point(l, R(0))}) {
      const Point q = w.from_legendre(p);
      EXPECT_TRUE(w.curve.contains(q));
      EXPECT_EQ(w.to_legendre(q), p);
    }
    EXPECT_TRUE(w.from_legendre(Point::infinity()).is_infinity());
  }
}

TEST(CurveQType, Basics) {
  EXPECT_THROW(CurveQ(0, 0), Error);
  EXPECT_THROW(CurveQ(-3, 2), Error);
  const CurveQ e(-1, 0);
  EXPECT_EQ(e.discriminant(), 64);
  EXPECT_TRUE(e.contains(Point(R(0), R(0))));
  EXPECT_FALSE(e.contains(Point(R(2), R(1))));
  EXPECT_TRUE(e.contains(Point::infinity()));
}

TEST(AddPoints, Examples) {
  const CurveQ e(-1, 0);
  const Point o = Point::infinity();
  const Point p0(R(0), R(0)), p1(R(1), R(0)), pm(R(-1), R(0));
  EXPECT_EQ(add_points(e, p0, p1), pm);
  EXPECT_EQ(add_points(e, p0, o), p0);
  EXPECT_EQ(add_points(e, o, p1), p1);
  EXPECT_TRUE(add_points(e, p0, p0).is_infinity());
  EXPECT_THROW(add_points(e, Point(R(2), R(1)), p0), Error);
}

TEST(AddPoints, GroupLawOnANonTorsionPoint) {
  // y^2 = x^3 - 2 has the point (3, 5) of infinite order.
  const CurveQ e(0, -2);
  const Point p(R(3), R(5));
  ASSERT_TRUE(e.contains(p));
  std::vector<Point> mult{Point::infinity()};
  for (int k = 1; k <= 6; ++k) mult.push_back(add_points(e, mult.back(), p));
  for (const auto& q : mult) EXPECT_TRUE(e.contains(q));
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      EXPECT_EQ(add_points(e, mult[i], mult[j]), mult[i + j]);
      EXPECT_EQ(add_points(e, mult[i], mult[j]), add_points(e, mult[j], mult[i]));
    }
  EXPECT_EQ(add_points(e, add_points(e, mult[1], mult[2]), mult[3]),
            add_points(e, mult[1], add_points(e, mult[2], mult[3])));
  EXPECT_TRUE(add_points(e, p, negate(p)).is_infinity());
  EXPECT_EQ(multiply(e, p, 5), mult[5]);
  EXPECT_EQ(multiply(e, p, 0), Point::infinity());
  EXPECT_FALSE(point_order(e, p).has_value());
}

TEST(PointOrder, Examples) {
  const CurveQ e(4, 0);
  EXPECT_EQ(point_order(e, Point(R(2), R(4))), 4u);
  EXPECT_EQ(point_order(e, Point(R(0), R(0))), 2u);
  EXPECT_EQ(point_order(e, Point::infinity()), 1u);
}

TEST(IntegerRoots, Examples) {
  EXPECT_EQ(integer_roots_depressed_cubic(-1, 0), ints({-1, 0, 1}));
  EXPECT_EQ(integer_roots_depressed_cubic(-4, 0), ints({-2, 0, 2}));
  EXPECT_EQ(integer_roots_depressed_cubic(4, 0), ints({0}));
  EXPECT_EQ(integer_roots_depressed_cubic(0, -8), ints({2}));
  EXPECT_EQ(integer_roots_depressed_cubic(-7, 6), ints({-3, 1, 2}));
  EXPECT_TRUE(integer_roots_depressed_cubic(0, 2).empty());
}

TEST(IntegerRoots, MatchScan) {
  for (long a = -30; a <= 30; a += 3)
    for (long c = -40; c <= 40; c += 5) {
      std::vector<BigInt> scan;
      for (long x = -50; x <= 50; ++x)
        if (x * x * x + a * x + c == 0) scan.emplace_back(x);
      EXPECT_EQ(integer_roots_depressed_cubic(a, c), scan) << a << "," << c;
    }
}

TEST(Torsion, Examples) {
  const TorsionResult cm = torsion_subgroup(CurveQ(-1, 0));
  EXPECT_EQ(cm.group, G({2, 2}));
  EXPECT_EQ(cm.points, (std::vector<Point>{Point::infinity(), Point(R(-1), R(0)),
                                            Point(R(0), R(0)), Point(R(1), R(0))}));
  EXPECT_EQ(torsion_subgroup(CurveQ(-4, 0)).group, G({2, 2}));
  const TorsionResult z4 = torsion_subgroup(CurveQ(4, 0));
  EXPECT_EQ(z4.group, G({4}));
  EXPECT_EQ(z4.points.size(), 4u);
}

TEST(Torsion, KnownGroups) {
  // Textbook curves with each cyclic torsion order.
  EXPECT_TRUE(torsion_subgroup(CurveQ(0, 2)).group.is_trivial());  // y^2 = x^3 + 2
  EXPECT_EQ(torsion_subgroup(CurveQ(1, 0)).group, G({2}));
  EXPECT_EQ(torsion_subgroup(CurveQ(0, 1)).group, G({6}));          // y^2 = x^3 + 1
  EXPECT_EQ(torsion_subgroup(CurveQ(0, -432)).group, G({3}));       // (12, +-36)
  EXPECT_EQ(torsion_subgroup(CurveQ(-2, 0)).group, G({2}));
}

TEST(Torsion, IsAClosedMazurGroupDividingGoodReductionCounts) {
  std::mt19937_64 rng(17);
  int curves = 0;
  while (curves < 40) {
    const long a = static_cast<long>(rng() % 41) - 20;
    const long b = static_cast<long>(rng() % 41) - 20;
    if (4 * a * a * a + 27 * b * b == 0) continue;
    ++curves;
    const CurveQ e(a, b);
    const TorsionResult t = torsion_subgroup(e);
    EXPECT_TRUE(is_mazur_admissible(t.group));
    ASSERT_TRUE(t.group.order().has_value());
    EXPECT_EQ(BigInt(static_cast<long>(t.points.size())), *t.group.order());
    EXPECT_TRUE(std::is_sorted(t.points.begin(), t.points.end()));
    const std::set<Point> pts(t.points.begin(), t.points.end());
    for (const auto& p : t.points) {
      EXPECT_TRUE(e.contains(p));
      for (const auto& q : t.points) EXPECT_TRUE(pts.count(add_points(e, p, q)));
    }
    for (long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
      if (divides(BigInt(p), e.discriminant())) continue;
      EXPECT_TRUE(divides(*t.group.order(), BigInt(testing::brute_count(a, b, p))))
          << "a=" << a << " b=" << b << " p=" << p;
    }
  }
}

}  // namespace
}  // namespace afinv
