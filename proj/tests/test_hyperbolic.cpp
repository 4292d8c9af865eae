#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "teich2/errors.hpp"
#include "teich2/hyperbolic.hpp"

using namespace teich2;

namespace {

DiskPoint random_point(std::mt19937_64& rng, double radius = 0.95) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const Complex z(u(rng), u(rng));
    if (std::abs(z) < 1.0) return DiskPoint(radius * z);
  }
}

Mobius random_mobius(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  return rotation(ang(rng)) * half_turn(random_point(rng, 0.8)) * rotation(ang(rng));
}

}  // namespace

TEST(Disk, RejectsPointsOnOrOutsideTheCircle) {
  EXPECT_THROW(DiskPoint(1.0, 0.0), DomainError);
  EXPECT_THROW(DiskPoint(Complex(0.8, 0.8)), DomainError);
  EXPECT_NO_THROW(DiskPoint(0.999999, 0.0));
  EXPECT_EQ(DiskPoint().z(), Complex(0.0, 0.0));
}

TEST(Disk, DistanceFrozenValues) {
  EXPECT_NEAR(dist(DiskPoint(), DiskPoint(0.5, 0.0)), 1.09861228866810969, 1e-15);
  EXPECT_NEAR(dist(DiskPoint(0.3, 0.4), DiskPoint(-0.1, -0.2)), 1.54901709934007427, 1e-14);
  EXPECT_EQ(dist(DiskPoint(0.3, 0.4), DiskPoint(0.3, 0.4)), 0.0);
}

TEST(Disk, DistanceStaysAccurateNearTheBoundary) {
  // 2 atanh(r) for r close to 1; the stable form must not lose digits.
  const double r = 1.0 - 1e-9;
  EXPECT_NEAR(dist(DiskPoint(), DiskPoint(r, 0.0)), 2.0 * std::atanh(r), 1e-6);
}

TEST(Disk, DistanceIsAMetric) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const DiskPoint x = random_point(rng), y = random_point(rng), z = random_point(rng);
    EXPECT_NEAR(dist(x, y), dist(y, x), 1e-12);
    EXPECT_LE(dist(x, z), dist(x, y) + dist(y, z) + 1e-12);
  }
}

TEST(Mobius, IsometryOfRandomElements) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Mobius t = random_mobius(rng);
    const DiskPoint x = random_point(rng, 0.9), y = random_point(rng, 0.9);
    const double d = dist(x, y);
    EXPECT_NEAR(dist(t.apply(x), t.apply(y)), d, 1e-9 * std::max(1.0, d));
  }
}

TEST(Mobius, GroupLaws) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Mobius a = random_mobius(rng), b = random_mobius(rng), c = random_mobius(rng);
    EXPECT_LT(((a * b) * c).projective_distance(a * (b * c)), 1e-10);
    EXPECT_LT((a * a.inverse()).distance_to_identity(), 1e-10);
    const DiskPoint z = random_point(rng, 0.5);
    EXPECT_LT(std::abs((a * b).apply(z).z() - a.apply(b.apply(z)).z()), 1e-10);
    EXPECT_NEAR(a.determinant(), 1.0, 1e-12);
  }
}

TEST(Mobius, ProjectiveEqualityIgnoresSign) {
  const Mobius h = half_turn(DiskPoint(0.3, -0.2));
  EXPECT_EQ(h.projective_distance(-h), 0.0);
  EXPECT_EQ(h.canonical().projective_distance(h), 0.0);
  EXPECT_GT(h.canonical().u().real(), 0.0);
}

TEST(Mobius, RenormalizesSmallDefectsAndRejectsLargeOnes) {
  const Mobius m(Complex(1.0 + 1e-12, 0.0), Complex(0.0, 0.0));
  EXPECT_NEAR(m.determinant(), 1.0, 1e-15);
  EXPECT_THROW(Mobius(Complex(2.0, 0.0), Complex(0.0, 0.0)), DomainError);
  EXPECT_THROW(Mobius(Complex(0.5, 0.0), Complex(1.0, 0.0)), DomainError);
}

TEST(Mobius, RotationAndHalfTurns) {
  const Complex z(0.2, 0.1);
  const Mobius r = rotation(0.7);
  EXPECT_LT(std::abs(r.apply(z) - std::polar(1.0, 0.7) * z), 1e-15);
  EXPECT_EQ(classify(r), IsometryClass::elliptic);

  const DiskPoint p(0.4, -0.3);
  const Mobius h = half_turn(p);
  EXPECT_LT(std::abs(h.apply(-p.z()) - p.z()), 1e-14);
  EXPECT_EQ(classify(h), IsometryClass::hyperbolic);

  const Mobius m = m_half_turn(Complex(0.5, 0.2));
  EXPECT_NEAR(m.trace(), 0.0, 1e-15);
  EXPECT_LT((m * m).distance_to_minus_identity(), 1e-14);
  EXPECT_THROW(m_half_turn(Complex(1.0, 0.0)), DomainError);

  // |u|^2 - |v|^2 = 2 - 1, trace 2.
  EXPECT_EQ(classify(Mobius(Complex(1.0, 1.0), Complex(1.0, 0.0))), IsometryClass::parabolic);
}

TEST(Geodesic, ClosestPointAndUnitSpeed) {
  const GeodesicArc unit = GeodesicArc::circular(1.0, 0.0);
  EXPECT_NEAR(unit.point(0.0).x(), std::sqrt(2.0) - 1.0, 1e-15);
  EXPECT_NEAR(unit.point(0.0).y(), 0.0, 1e-15);

  const GeodesicArc arc = GeodesicArc::circular(0.5, kPi / 3.0);
  const DiskPoint closest = arc.point(0.0);
  EXPECT_NEAR(closest.modulus(), 0.618033988749894848, 1e-15);
  EXPECT_NEAR(std::arg(closest.z()), kPi / 3.0, 1e-14);
  EXPECT_NEAR(dist(DiskPoint(), closest), 1.44363547517881034, 1e-14);
  for (double s : {-3.0, -0.5, 0.25, 2.0}) {
    EXPECT_LT(arc.residual(arc.point(s).z()), 1e-14);
    EXPECT_NEAR(dist(arc.point(0.0), arc.point(s)), std::abs(s), 1e-10);
  }
  EXPECT_LT(std::abs(arc.center() - std::sqrt(1.25) * std::polar(1.0, kPi / 3.0)), 1e-15);
}

TEST(Geodesic, Diameter) {
  const GeodesicArc d = GeodesicArc::diameter(kPi / 4.0);
  EXPECT_NEAR(dist(DiskPoint(), d.point(1.5)), 1.5, 1e-13);
  EXPECT_LT(d.residual(d.point(-0.8).z()), 1e-15);
  EXPECT_EQ(d.point(0.0).modulus(), 0.0);
}
