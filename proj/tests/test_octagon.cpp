#include <gtest/gtest.h>

#include <cmath>

#include "teich2/errors.hpp"
#include "teich2/octagon.hpp"

using namespace teich2;

namespace {

// Independent 30-digit evaluations at a = 0.8, alpha_tilde = pi/12.
constexpr double kA = 0.8;
constexpr double kAt = kPi / 12.0;
constexpr double kB = 0.915063509461097;
constexpr double kRPlus = 0.610446729362350;
constexpr double kRMinus = 0.323567638922788;
constexpr double kBeta = 1.14642167456243;
constexpr double kPhiPlus = 0.505624016202049;
constexpr double kPhiMinus = 1.34771198008426;
constexpr double kPerimeter = 27.0233287060748;

OctagonGeometry sample() { return build_geometry(OctagonParams::validate(kA, kAt)); }

DomainBound bound_of(double a, double at, double margin = 0.0) {
  try {
    OctagonParams::validate(a, at, margin);
  } catch (const OutOfDomain& e) {
    return e.which();
  }
  ADD_FAILURE() << "expected OutOfDomain for a=" << a << " alpha_tilde=" << at;
  return DomainBound::alpha_range;
}

}  // namespace

TEST(Octagon, FrozenGeometry) {
  const OctagonGeometry g = sample();
  EXPECT_NEAR(g.b, kB, 1e-14);
  EXPECT_NEAR(g.beta, kBeta, 1e-13);
  EXPECT_NEAR(g.arc_plus.radius(), kRPlus, 1e-14);
  EXPECT_NEAR(g.arc_minus.radius(), kRMinus, 1e-14);
  EXPECT_NEAR(g.arc_plus.phi(), kPhiPlus, 1e-14);
  EXPECT_NEAR(g.arc_minus.phi(), kPhiMinus, 1e-13);
  EXPECT_NEAR(perimeter(g.params), kPerimeter, 1e-12);
  EXPECT_NEAR(g.omega4, 2 * kA / (1 + kA * kA), 1e-15);
}

TEST(Octagon, DomainBoundsNameTheViolatedInequality) {
  EXPECT_EQ(bound_of(0.5, 0.0), DomainBound::lower_a);
  EXPECT_EQ(bound_of(1.0, 0.0), DomainBound::upper_a);
  EXPECT_EQ(bound_of(0.99, 0.0, 0.02), DomainBound::upper_a);
  EXPECT_EQ(bound_of(0.9, 0.8), DomainBound::alpha_range);
  EXPECT_EQ(bound_of(0.9, -kPi / 4.0), DomainBound::alpha_range);
  // Lower bound grows with |alpha_tilde|.
  EXPECT_EQ(bound_of(0.75, 0.5), DomainBound::lower_a);
  EXPECT_NEAR(lower_a_bound(0.0), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NO_THROW(OctagonParams::validate(0.9, 0.5));
}

TEST(Octagon, RegularPoint) {
  const OctagonParams r = OctagonParams::regular();
  EXPECT_NEAR(r.a(), std::pow(2.0, -0.25), 1e-15);
  EXPECT_NEAR(r.b(), r.a(), 1e-15);
  EXPECT_NEAR(perimeter(r), 24.4571347116960, 1e-12);
  const OctagonGeometry g = build_geometry(r);
  EXPECT_NEAR(side_length(g, 0), side_length(g, 1), 1e-12);
  EXPECT_NEAR(g.beta, kPi / 4.0, 1e-14);
}

TEST(Octagon, VerticesAndMidpointsLieOnTheirSides) {
  const OctagonGeometry g = sample();
  for (int k = 0; k < 8; ++k) {
    const GeodesicArc arc = g.side_arc(k);
    EXPECT_LT(arc.residual(g.vertices[k].z()), 1e-14) << k;
    EXPECT_LT(arc.residual(g.vertices[(k + 1) % 8].z()), 1e-14) << k;
    EXPECT_LT(arc.residual(g.side_midpoint(k).z()), 1e-13) << k;
    const double to_start = dist(g.side_midpoint(k), g.vertices[k]);
    const double to_end = dist(g.side_midpoint(k), g.vertices[(k + 1) % 8]);
    EXPECT_NEAR(to_start, to_end, 1e-11) << k;
  }
}

TEST(Octagon, OppositeSidesAreEqualButAdjacentSidesDiffer) {
  const OctagonGeometry g = sample();
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(side_length(g, k), side_length(g, k + 4), 1e-12);
  EXPECT_NEAR(side_length(g, 0), 3.96824, 1e-5);
  EXPECT_NEAR(side_length(g, 1), 2.78759, 1e-5);
}

TEST(Octagon, PerimeterClosedFormMatchesVertexSum) {
  for (double a : {0.75, 0.8, 0.9, 0.97}) {
    for (double at : {-0.5, -0.1, 0.0, 0.2, 0.6}) {
      if (a <= lower_a_bound(at) + 1e-3) continue;
      const OctagonGeometry g = build_geometry(OctagonParams::validate(a, at));
      const double p = perimeter(g.params);
      EXPECT_NEAR(perimeter_numeric(g), p, 1e-8 * p) << a << " " << at;
    }
  }
}

TEST(Octagon, AnglesAndGaussBonnet) {
  const OctagonGeometry g = sample();
  const InteriorAngles angles = interior_angles_numeric(g);
  EXPECT_NEAR(angles.at_a, kBeta, 1e-12);
  EXPECT_NEAR(angles.at_b, kPi / 2.0 - kBeta, 1e-12);
  EXPECT_NEAR(4.0 * (angles.at_a + angles.at_b), 2.0 * kPi, 1e-12);
  EXPECT_NEAR(area_from_angles(angles), 4.0 * kPi, 1e-11);
}

TEST(Octagon, DualExchangesTheVertexRadii) {
  const OctagonParams p = OctagonParams::validate(kA, kAt);
  const OctagonParams d = p.dual();
  EXPECT_NEAR(d.a(), kB, 1e-14);
  EXPECT_NEAR(d.alpha_tilde(), -kAt, 0.0);
  EXPECT_NEAR(d.b(), kA, 1e-14);
  EXPECT_NEAR(d.dual().a(), kA, 1e-14);
  EXPECT_NEAR(perimeter(d), perimeter(p), 1e-11);
}

TEST(Octagon, Contains) {
  const OctagonGeometry g = sample();
  EXPECT_TRUE(g.contains(Complex(0.0, 0.0)));
  EXPECT_TRUE(g.contains(0.5 * g.p_plus.z()));
  EXPECT_FALSE(g.contains(0.999 * g.vertices[0].z() / g.vertices[0].modulus()));
  EXPECT_FALSE(g.contains(1.05 * g.p_minus.z()));
}

TEST(Octagon, AuxiliaryPointsAndDiagonal) {
  const OctagonGeometry g = sample();
  EXPECT_EQ(g.omega(5), Complex(0.0, 0.0));
  EXPECT_NEAR(std::abs(g.omega(2) - Complex(0, 1) * g.omega_plus), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g.side_midpoint(6).z() + g.side_midpoint(2).z()), 0.0, 1e-15);
  const auto [lo, hi] = g.diagonal_endpoints();
  EXPECT_EQ(lo.z(), Complex(-kA, 0.0));
  EXPECT_EQ(hi.z(), Complex(kA, 0.0));
  // p+ = omega+/(1 + sqrt(1 - |omega+|^2)).
  const Complex w = g.omega_plus;
  EXPECT_LT(std::abs(g.p_plus.z() - w / (1.0 + std::sqrt(1.0 - std::norm(w)))), 1e-15);
}
