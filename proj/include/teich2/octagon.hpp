#pragma once

// Two-parameter family of octagons with a pi/2 rotational symmetry, vertices
// at a e^{i k pi/2} and b e^{i(alpha + k pi/2)}, inner angle sum 2 pi.
//
// Indexing: v_0 = a, v_1 = b e^{i alpha}, v_2 = i a, ..., v_7 = b e^{i(alpha + 3pi/2)}
// counterclockwise. Side s_k joins v_k to v_{k+1 mod 8}; even sides lie on
// the "+" geodesics, odd sides on the "-" geodesics. s_k and s_{k+4} are
// paired by the generator g_k.

#include <array>
#include <utility>

#include "teich2/hyperbolic.hpp"

namespace teich2 {

// Validated (a, alpha_tilde) with alpha_tilde = alpha - pi/4. The admissible
// region is |alpha_tilde| < pi/4 - margin and
// 1/(sqrt(2) cos alpha_tilde) + margin < a < 1 - margin.
class OctagonParams {
 public:
  // Throws OutOfDomain naming the violated inequality.
  static OctagonParams validate(double a, double alpha_tilde, double margin = 0.0);

  // The regular octagon a = 2^{-1/4}, alpha_tilde = 0.
  static OctagonParams regular();

  double a() const noexcept { return a_; }
  double alpha_tilde() const noexcept { return alpha_tilde_; }
  double alpha() const noexcept { return alpha_tilde_ + kPi / 4.0; }
  double margin() const noexcept { return margin_; }

  // b = 1/(sqrt(2) a cos alpha_tilde).
  double b() const noexcept;

  // Image under the Z2 exchange (a, alpha_tilde) -> (b, -alpha_tilde).
  OctagonParams dual() const;

 private:
  OctagonParams(double a, double alpha_tilde, double margin)
      : a_(a), alpha_tilde_(alpha_tilde), margin_(margin) {}

  double a_;
  double alpha_tilde_;
  double margin_;
};

inline OctagonParams validate_params(double a, double alpha_tilde, double margin = 0.0) {
  return OctagonParams::validate(a, alpha_tilde, margin);
}

// Lower admissible bound on a for a given alpha_tilde (margin excluded).
double lower_a_bound(double alpha_tilde);

struct OctagonGeometry {
  OctagonParams params;
  double b;
  double beta;  // inner angle at the vertices a e^{i k pi/2}
  double t_plus;
  double t_minus;
  GeodesicArc arc_plus;   // geodesic carrying s_0
  GeodesicArc arc_minus;  // geodesic carrying s_1
  std::array<DiskPoint, 8> vertices;
  Complex omega_plus;
  Complex omega_minus;
  DiskPoint p_plus;   // midpoint of s_0
  DiskPoint p_minus;  // midpoint of s_1
  double omega4;      // 2a / (1 + a^2)

  // Geodesic carrying side s_k (k taken mod 8).
  GeodesicArc side_arc(int k) const;

  // Midpoint of side s_k: p_0..p_3 = p+, p-, i p+, i p-, and p_{k+4} = -p_k.
  DiskPoint side_midpoint(int k) const;

  // Auxiliary omega_k: omega_0..3 = w+, w-, i w+, i w-, omega_4, omega_5 = 0.
  Complex omega(int k) const;

  // Endpoints of the main diagonal carrying the third pants curve: -a and a.
  std::pair<DiskPoint, DiskPoint> diagonal_endpoints() const;

  // Strict interior test against the eight bounding geodesics.
  bool contains(Complex z) const;
};

OctagonGeometry build_geometry(const OctagonParams& params);

struct InteriorAngles {
  double at_a;  // angle at the vertices a e^{i k pi/2}
  double at_b;  // angle at the vertices b e^{i(alpha + k pi/2)}
};

// Angles measured from the Euclidean tangents of the two arcs meeting at each
// vertex. The disk metric is conformal, so these are the hyperbolic angles.
InteriorAngles interior_angles_numeric(const OctagonGeometry& geom);

// Gauss-Bonnet area (n - 2) pi - (angle sum) of the octagon.
double area_from_angles(const InteriorAngles& angles);

// 8 arccosh[(1 - a^2 b^2 + sqrt((1 - a^2)^2 + (1 - b^2)^2)) / ((1 - a^2)(1 - b^2))].
double perimeter(const OctagonParams& params);

// Sum of vertex-to-vertex hyperbolic distances.
double perimeter_numeric(const OctagonGeometry& geom);

// Hyperbolic length of side s_k.
double side_length(const OctagonGeometry& geom, int k);

}  // namespace teich2
